''' Right and left subword reversing, fraction extraction, the
spherical-type word problem, and completeness sampling.

Right reversing repeatedly rewrites the leftmost negative-positive pattern
s^-1 t (type 0 when s = t, type 2r otherwise) until the word has the shape
(positive)(negative)^-1.  Left reversing is the mirror image, acting on the
rightmost positive-negative pattern with type 2l steps, and converges to a
negative-positive word.  Budgets are mandatory: outside spherical type the
process need not terminate.
'''

from __future__ import annotations

from dataclasses import dataclass

from .core import invert, is_positive, word_to_positive, positive_to_word
from .rewrite import Step, Derivation, apply_step, check_derivation


class ReversingError(ValueError):
	pass


@dataclass
class ReversalResult:
	word: tuple
	converged: bool
	blocked: str = None  # reason, when no relation covers a pattern
	trace: Derivation = None
	step_count: int = 0


def _find_right_pattern(w):
	for i in range(len(w) - 1):
		if w[i][1] == -1 and w[i + 1][1] == 1:
			return i
	return None


def _find_left_pattern(w):
	for i in range(len(w) - 2, -1, -1):
		if w[i][1] == 1 and w[i + 1][1] == -1:
			return i
	return None


def _relation_for(p, s, t, initial):
	'''Lowest-index relation whose sides start (initial=True) or end
	(initial=False) with s and t respectively, with orientation.'''
	for ri, (l, r) in enumerate(p.relations):
		a = (l[0], r[0]) if initial else (l[-1], r[-1])
		if a == (s, t):
			return ri, 'fwd'
		if a == (t, s):
			return ri, 'bwd'
	return None, None


def right_reverse(p, w, budget=10000):
	'''Eliminate s^-1 t patterns by {0, 2r} steps.  Converged words have
	the shape w1 w2^-1 with w1, w2 positive.'''
	if budget <= 0:
		raise ReversingError('budget must be positive')
	steps = []
	cur = tuple(w)
	for _ in range(budget):
		i = _find_right_pattern(cur)
		if i is None:
			return ReversalResult(cur, True, trace=Derivation(tuple(w), steps),
				step_count=len(steps))
		s, t = cur[i][0], cur[i + 1][0]
		if s == t:
			step = Step('0', i, sign=-1)
		else:
			ri, orient = _relation_for(p, s, t, initial=True)
			if ri is None:
				return ReversalResult(cur, False,
					blocked='no relation reverses %s^-1 %s' % (s, t),
					trace=Derivation(tuple(w), steps), step_count=len(steps))
			step = Step('2r', i, rel=ri, orient=orient, lv=1, lvp=1)
		cur = apply_step(p, cur, step)
		steps.append(step)
	return ReversalResult(cur, False, trace=Derivation(tuple(w), steps),
		step_count=len(steps))


def left_reverse(p, w, budget=10000):
	'''Eliminate s t^-1 patterns by {0, 2l} steps.  Converged words have
	the shape w1^-1 w2 with w1, w2 positive.'''
	if budget <= 0:
		raise ReversingError('budget must be positive')
	steps = []
	cur = tuple(w)
	for _ in range(budget):
		i = _find_left_pattern(cur)
		if i is None:
			return ReversalResult(cur, True, trace=Derivation(tuple(w), steps),
				step_count=len(steps))
		s, t = cur[i][0], cur[i + 1][0]
		if s == t:
			step = Step('0', i, sign=1)
		else:
			ri, orient = _relation_for(p, s, t, initial=False)
			if ri is None:
				return ReversalResult(cur, False,
					blocked='no relation reverses %s %s^-1' % (s, t),
					trace=Derivation(tuple(w), steps), step_count=len(steps))
			step = Step('2l', i, rel=ri, orient=orient, lv=1, lvp=1)
		cur = apply_step(p, cur, step)
		steps.append(step)
	return ReversalResult(cur, False, trace=Derivation(tuple(w), steps),
		step_count=len(steps))


def split_neg_pos(w):
	'''Split a converged left-reversal word v1^-1 v2 into (v1, v2).'''
	k = 0
	while k < len(w) and w[k][1] == -1:
		k += 1
	if not all(e == 1 for _, e in w[k:]):
		raise ReversingError('word is not negative-positive: %r' % (w,))
	return word_to_positive(invert(w[:k])), word_to_positive(w[k:])


def split_pos_neg(w):
	k = 0
	while k < len(w) and w[k][1] == 1:
		k += 1
	if not all(e == -1 for _, e in w[k:]):
		raise ReversingError('word is not positive-negative: %r' % (w,))
	return word_to_positive(w[:k]), word_to_positive(invert(w[k:]))


@dataclass
class Fraction:
	numerator: tuple
	denominator: tuple
	side: str
	trace: Derivation


def right_fraction(p, w, budget=10000):
	'''Left-reverse to v1^-1 v2, then right-reverse that to w1 w2^-1.  In
	spherical type (w1, w2) represent the right numerator and denominator
	and are right-coprime.'''
	lr = left_reverse(p, w, budget)
	if not lr.converged:
		raise ReversingError(lr.blocked or 'left reversal budget exhausted')
	rr = right_reverse(p, lr.word, budget)
	if not rr.converged:
		raise ReversingError(rr.blocked or 'right reversal budget exhausted')
	num, den = split_pos_neg(rr.word)
	trace = Derivation(tuple(w), lr.trace.steps + rr.trace.steps)
	return Fraction(num, den, 'right', trace)


def left_fraction(p, w, budget=10000):
	'''Single left reversal to g1^-1 g2; returns (denominator g1,
	numerator g2) as the left fraction of w.'''
	lr = left_reverse(p, w, budget)
	if not lr.converged:
		raise ReversingError(lr.blocked or 'left reversal budget exhausted')
	den, num = split_neg_pos(lr.word)
	return Fraction(num, den, 'left', lr.trace)


def word_problem_spherical(p, w, budget=10000):
	'''True iff the right fraction of w is (empty, empty); the trace is a
	{0,2} derivation witnessing w ~> empty when true.'''
	if not p.declared_spherical:
		raise ReversingError('presentation not declared spherical')
	f = right_fraction(p, w, budget)
	ok = not f.numerator and not f.denominator
	return ok, f.trace


def completeness_check(p, u, v, budget=10000):
	'''Whether u^-1 v right-reverses to the empty word, for positive u, v.'''
	w = invert(positive_to_word(u)) + positive_to_word(v)
	res = right_reverse(p, w, budget)
	return res.converged and res.word == (), res


def completeness_sample(p, pairs, budget=10000):
	'''Run the completeness check on sampled equivalent positive pairs;
	failures are data, not errors.'''
	passed, failed = 0, []
	for u, v in pairs:
		ok, _ = completeness_check(p, u, v, budget)
		if ok:
			passed += 1
		else:
			failed.append((u, v))
	return {'passed': passed, 'failed': failed, 'total': passed + len(failed)}
