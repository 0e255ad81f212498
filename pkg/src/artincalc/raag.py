''' Augmented words and the constructive elimination of insertion steps
for right-angled presentations.

An augmented letter is a triple (gen, index, sign); index 0 letters are
identified with the original alphabet.  phi erases indices; pi_h deletes
letters of index >= h.  Augmented transformations:

	type 0:   remove s[i]^e s[j]^-e and relabel every remaining occurrence
	          of index i or j on generator s to min(i, j)
	type 1:   swap s[i]^e t[j]^e when st = ts is a relation
	type 2:   swap s[i]^e t[j]^-e when st = ts is a relation
	type inf: insert s[i]^e s[i]^-e with i strictly larger than every
	          index present

Lifting a {0,1,inf} derivation gives an augmented derivation whose
intermediate words are all regular; projecting by descending top index
yields a {0,1,2} derivation on plain words.
'''

from __future__ import annotations

from dataclasses import dataclass

from .core import Presentation
from .rewrite import (Step, Derivation, apply_step, check_derivation,
	simulate_type2)


class AugError(ValueError):
	pass


def phi(w):
	'''Erase indices.'''
	return tuple((g, e) for g, i, e in w)


def pi_h(w, h):
	'''Delete letters of index >= h.'''
	return tuple(let for let in w if let[1] < h)


def to_aug(w):
	'''A plain word as an all-index-0 augmented word.'''
	return tuple((g, 0, e) for g, e in w)


def max_index(w):
	return max((i for _, i, _ in w), default=-1)


@dataclass(frozen=True)
class AugStep:
	kind: str       # '0', '1', '2', 'inf'
	pos: int
	letter: str = None  # inf only
	index: int = None   # inf only
	sign: int = None    # inf only

	def to_json(self):
		d = {'kind': self.kind, 'pos': self.pos}
		if self.kind == 'inf':
			d.update(letter=self.letter, index=self.index, sign=self.sign)
		return d

	@classmethod
	def from_json(cls, d):
		return cls(d['kind'], d['pos'], d.get('letter'), d.get('index'), d.get('sign'))


@dataclass
class AugDerivation:
	start: tuple
	steps: list


def apply_aug_step(p, w, s):
	n = len(w)
	if s.kind == '0':
		if s.pos + 2 > n:
			raise AugError('aug type 0 out of range')
		(g1, i1, e1), (g2, i2, e2) = w[s.pos], w[s.pos + 1]
		if g1 != g2 or e1 != -e2:
			raise AugError('no trivial pair at %d' % s.pos)
		lo = min(i1, i2)
		rest = w[:s.pos] + w[s.pos + 2:]
		return tuple((g, lo, e) if g == g1 and i in (i1, i2) else (g, i, e)
			for g, i, e in rest)
	if s.kind in ('1', '2'):
		if s.pos + 2 > n:
			raise AugError('aug swap out of range')
		(g1, i1, e1), (g2, i2, e2) = w[s.pos], w[s.pos + 1]
		if not p.commutes(g1, g2):
			raise AugError('%s and %s do not commute' % (g1, g2))
		if s.kind == '1' and e1 != e2:
			raise AugError('aug type 1 needs equal signs')
		if s.kind == '2' and e1 != -e2:
			raise AugError('aug type 2 needs opposite signs')
		return w[:s.pos] + (w[s.pos + 1], w[s.pos]) + w[s.pos + 2:]
	if s.kind == 'inf':
		if not 0 <= s.pos <= n:
			raise AugError('insertion position out of range')
		if s.index <= max_index(w):
			raise AugError('insertion index %d not fresh' % s.index)
		pair = ((s.letter, s.index, s.sign), (s.letter, s.index, -s.sign))
		return w[:s.pos] + pair + w[s.pos:]
	raise AugError('unknown augmented step kind %r' % s.kind)


def check_aug_derivation(p, d):
	w = tuple(d.start)
	for i, s in enumerate(d.steps):
		try:
			w = apply_aug_step(p, w, s)
		except AugError as e:
			raise AugError('augmented step %d inapplicable: %s' % (i, e)) from None
	return w


def aug_derivation_words(p, d):
	words = [tuple(d.start)]
	for s in d.steps:
		words.append(apply_aug_step(p, words[-1], s))
	return words


def applicable_aug_steps(p, w):
	'''All applicable {0,1,2} augmented steps, plus the canonical fresh
	insertions at every position (one index, every generator and sign).'''
	out = []
	fresh = max(max_index(w), 0) + 1
	for pos in range(len(w) - 1):
		(g1, i1, e1), (g2, i2, e2) = w[pos], w[pos + 1]
		if g1 == g2 and e1 == -e2:
			out.append(AugStep('0', pos))
		if g1 != g2 and p.commutes(g1, g2):
			out.append(AugStep('1' if e1 == e2 else '2', pos))
	for pos in range(len(w) + 1):
		for g in p.generators:
			for e in (1, -1):
				out.append(AugStep('inf', pos, letter=g, index=fresh, sign=e))
	return out


# ---------------------------------------------------------------------------
# lifting

def _plain_step_to_aug(p, w, aw, step):
	'''Translate one plain {0,1,2r,2l,inf} step on phi(aw) = w into an
	augmented step at the same position.'''
	if step.kind == '0':
		return AugStep('0', step.pos)
	if step.kind == '1':
		if step.lv not in (None,):  # defensive: type 1 carries no split
			raise AugError('unexpected split on type 1')
		l, r = p.relations[step.rel]
		if len(l) != 2:
			raise AugError('lifting requires a right-angled presentation')
		return AugStep('1', step.pos)
	if step.kind in ('2r', '2l'):
		return AugStep('2', step.pos)
	if step.kind == 'inf':
		return AugStep('inf', step.pos, letter=step.letter,
			index=max(max_index(aw), 0) + 1, sign=step.sign)
	raise AugError('unknown plain step kind %r' % step.kind)


def lift_derivation(p, d):
	'''Step-for-step lift of a plain derivation over a right-angled
	presentation; insertion steps receive the fresh index max + 1.'''
	if not p.right_angled:
		raise AugError('lifting requires a right-angled presentation')
	aw = to_aug(tuple(d.start))
	aug_steps = []
	w = tuple(d.start)
	for step in d.steps:
		a = _plain_step_to_aug(p, w, aw, step)
		new_aw = apply_aug_step(p, aw, a)
		w = apply_step(p, w, step)
		if phi(new_aw) != w:
			raise AugError('lift does not project back to the plain word')
		aw = new_aw
		aug_steps.append(a)
	return AugDerivation(to_aug(tuple(d.start)), aug_steps)


# ---------------------------------------------------------------------------
# regularity

def is_regular(p, w):
	'''Each positive index occurs 0 or 2 times, as a pair r[h]^e ... r[h]^-e
	whose strictly enclosed letters of index <= h all commute with r.
	Returns (bool, diagnosis).'''
	by_index = {}
	for pos, (g, i, e) in enumerate(w):
		if i >= 1:
			by_index.setdefault(i, []).append(pos)
	for h, positions in sorted(by_index.items()):
		if len(positions) != 2:
			return False, 'index %d occurs %d times' % (h, len(positions))
		a, b = positions
		(g1, _, e1), (g2, _, e2) = w[a], w[b]
		if g1 != g2:
			return False, 'index %d letters have different generators' % h
		if e1 != -e2:
			return False, 'index %d letters do not have opposite signs' % h
		for g, i, e in w[a + 1:b]:
			if i <= h and g != g1 and not p.commutes(g1, g):
				return False, 'index %d pair encloses non-commuting %s' % (h, g)
			if i <= h and g == g1:
				return False, 'index %d pair encloses its own generator' % h
	return True, 'regular'


# ---------------------------------------------------------------------------
# projection (one step, top index h)

def _adjusted_pos(w, pos, h):
	'''Position in pi_h(w) of the boundary before w[pos].'''
	return sum(1 for let in w[:pos] if let[1] < h)


def _swap_block(p, pw, target):
	'''Steps moving one letter across a commuting block, turning pw into
	target; both words must agree except for that one move.'''
	if pw == target:
		return []
	if len(pw) != len(target):
		raise AugError('projection diff is not a single move')
	a = 0
	while pw[a] == target[a]:
		a += 1
	b = len(pw)
	while b > a and pw[b - 1] == target[b - 1]:
		b -= 1
	c = b
	mid_w, mid_t = pw[a:b], target[a:c]
	if len(mid_w) != len(mid_t) or sorted(mid_w) != sorted(mid_t):
		raise AugError('projection diff is not a single move')
	steps = []
	if mid_w and mid_t and mid_w[-1] == mid_t[0] and mid_w[:-1] == mid_t[1:]:
		# letter moves left across the block
		x = mid_w[-1]
		block = mid_w[:-1]
		cur = a + len(block) - 1
		for let in reversed(block):
			_require_swap(p, let, x)
			steps.append(AugStep('1' if let[2] == x[2] else '2', cur))
			cur -= 1
	elif mid_w and mid_t and mid_w[0] == mid_t[-1] and mid_w[1:] == mid_t[:-1]:
		# letter moves right across the block
		x = mid_w[0]
		block = mid_w[1:]
		cur = a
		for let in block:
			_require_swap(p, x, let)
			steps.append(AugStep('1' if let[2] == x[2] else '2', cur))
			cur += 1
	else:
		raise AugError('projection diff is not a single move')
	return steps


def _require_swap(p, l1, l2):
	if l1[0] == l2[0] or not p.commutes(l1[0], l2[0]):
		raise AugError('projection needs %s and %s to commute' % (l1[0], l2[0]))


def project_step(p, w, s, h):
	'''Augmented steps transforming pi_h(w) into pi_h(apply(w, s)), by case
	analysis on how the step interacts with the index-h pair.  w must be
	regular.'''
	ok, diag = is_regular(p, w)
	if not ok:
		raise AugError('projection needs a regular word: ' + diag)
	w2 = apply_aug_step(p, w, s)
	pw, pw2 = pi_h(w, h), pi_h(w2, h)
	if s.kind == 'inf':
		if s.index < h:
			return [AugStep('inf', _adjusted_pos(w, s.pos, h),
				letter=s.letter, index=s.index, sign=s.sign)]
		assert pw == pw2
		return []
	if s.kind in ('1', '2'):
		i1, i2 = w[s.pos][1], w[s.pos + 1][1]
		if i1 < h and i2 < h:
			return [AugStep(s.kind, _adjusted_pos(w, s.pos, h))]
		assert pw == pw2
		return []
	# type 0
	i1, i2 = w[s.pos][1], w[s.pos + 1][1]
	if i1 < h and i2 < h:
		return [AugStep('0', _adjusted_pos(w, s.pos, h))]
	if i1 >= h and i2 >= h:
		assert pw == pw2
		return []
	# one cancelled letter has index h: the surviving pair partner is
	# relabelled below h and must cross the pair contents by commutations
	steps = _swap_block(p, pw, pw2)
	cur = pw
	for st in steps:
		cur = apply_aug_step(p, cur, st)
	if cur != pw2:
		raise AugError('projected block does not replay')
	return steps


# ---------------------------------------------------------------------------
# elimination

def _aug_to_plain_step(p, w, s):
	'''A zero-index augmented step as a plain Step on phi(w).'''
	if s.kind == '0':
		return Step('0', s.pos, sign=w[s.pos][2])
	(g1, _, e1), (g2, _, e2) = w[s.pos], w[s.pos + 1]
	for ri, (l, r) in enumerate(p.relations):
		for orient, src in (('fwd', l), ('bwd', r)):
			if s.kind == '1' and set(src) == {g1, g2}:
				if e1 == 1 and src == (g1, g2):
					return Step('1', s.pos, rel=ri, orient=orient, sign=1)
				if e1 == -1 and src == (g2, g1):
					# factor (g2 g1)^-1 = g2^-1-last; inverse side replacement
					return Step('1', s.pos, rel=ri, orient=orient, sign=-1)
	if s.kind == '2':
		for ri, (l, r) in enumerate(p.relations):
			if set(l) != {g1, g2}:
				continue
			if e1 == -1:
				# g1^-1 g2 -> g2 g1^-1: type 2r with v = g1, v' = g2
				orient = 'fwd' if l[0] == g1 else 'bwd'
				return Step('2r', s.pos, rel=ri, orient=orient, lv=1, lvp=1)
			# g1 g2^-1 -> g2^-1 g1: type 2l with v = g1, v' = g2
			orient = 'fwd' if l[-1] == g1 else 'bwd'
			return Step('2l', s.pos, rel=ri, orient=orient, lv=1, lvp=1)
	raise AugError('no relation realizes the swap %s %s' % (g1, g2))


def eliminate_infinity(p, d, validate=True):
	'''Turn a valid {0,1,inf} derivation from w to the empty word into a
	{0,1,2} derivation from w to the empty word (right-angled only).'''
	if not p.right_angled:
		raise AugError('elimination requires a right-angled presentation')
	for st in d.steps:
		if st.kind in ('2r', '2l'):
			raise AugError('input derivation contains a type 2 step')
	if check_derivation(p, d) != ():
		raise AugError('input derivation does not end at the empty word')
	ad = lift_derivation(p, d)
	words = aug_derivation_words(p, ad)
	for w in words:
		ok, diag = is_regular(p, w)
		if not ok:
			raise AugError('lifted word not regular: ' + diag)
	steps = list(ad.steps)
	while True:
		h = max(max_index(w) for w in words)
		if h < 1:
			break
		new_steps = []
		for w, s in zip(words, steps):
			new_steps.extend(project_step(p, w, s, h))
		start = pi_h(words[0], h)
		nd = AugDerivation(start, new_steps)
		words = aug_derivation_words(p, nd)
		for w in words:
			ok, diag = is_regular(p, w)
			if not ok:
				raise AugError('projected word not regular: ' + diag)
		steps = new_steps
	plain_steps = []
	for w, s in zip(words, steps):
		plain_steps.append(_aug_to_plain_step(p, w, s))
	out = Derivation(tuple(d.start), plain_steps)
	if validate:
		if any(st.kind == 'inf' for st in out.steps):
			raise AugError('elimination left an insertion step')
		if check_derivation(p, out) != ():
			raise AugError('eliminated derivation does not replay to empty')
	return out


# ---------------------------------------------------------------------------
# shuffle word problem and derivation factories

def raag_word_problem(p, w):
	'''A {0,1,2} derivation from w to the empty word when w represents 1
	in the right-angled group, else None.  Repeatedly finds a letter pair
	s^e ... s^-e whose enclosed letters all commute with s, commutes the
	partner leftward, and cancels.'''
	if not p.right_angled:
		raise AugError('shuffle algorithm requires a right-angled presentation')
	steps = []
	cur = tuple(w)
	while cur:
		pair = _find_cancellable_pair(p, cur)
		if pair is None:
			return None
		i, j = pair
		for k in range(j - 1, i, -1):
			steps.append(_swap_plain(p, cur, k))
			cur = apply_step(p, cur, steps[-1])
		steps.append(Step('0', i, sign=cur[i][1]))
		cur = apply_step(p, cur, steps[-1])
	return Derivation(tuple(w), steps)


def _find_cancellable_pair(p, w):
	for i in range(len(w)):
		g, e = w[i]
		for j in range(i + 1, len(w)):
			g2, e2 = w[j]
			if g2 == g:
				if e2 == -e and all(x != g and p.commutes(g, x) for x, _ in w[i + 1:j]):
					return i, j
				break  # nearer same-generator letter blocks the pair
			if not p.commutes(g, g2):
				break
	return None


def _swap_plain(p, w, pos):
	'''Plain step swapping w[pos] and w[pos + 1] (commuting generators).'''
	(g1, e1), (g2, e2) = w[pos], w[pos + 1]
	aug = AugStep('1' if e1 == e2 else '2', pos)
	return _aug_to_plain_step(p, to_aug(w), aug)


def generate_01inf_derivation(p, w):
	'''A {0,1,inf} derivation from w to the empty word, built from the
	shuffle derivation by simulating every type 2 step.'''
	d = raag_word_problem(p, w)
	if d is None:
		raise AugError('word does not represent 1')
	steps = []
	cur = tuple(d.start)
	for s in d.steps:
		if s.kind in ('2r', '2l'):
			sim = simulate_type2(p, cur, s)
			steps.extend(sim.steps)
		else:
			steps.append(s)
		cur = apply_step(p, cur, s)
	out = Derivation(tuple(d.start), steps)
	if check_derivation(p, out) != ():
		raise AugError('simulated derivation does not replay to empty')
	return out


# ---------------------------------------------------------------------------
# random data for fuzzing

def random_right_angled(rng, n_gens):
	'''A random right-angled presentation on at most n_gens generators.'''
	gens = tuple('abcdefgh'[:n_gens])
	rels = []
	for i in range(n_gens):
		for j in range(i + 1, n_gens):
			if rng.random() < 0.5:
				rels.append(((gens[i], gens[j]), (gens[j], gens[i])))
	return Presentation(gens, tuple(rels))


def random_trivial_word(p, rng, max_len):
	'''A word representing 1, built by random insertions and commutations.'''
	w = ()
	for _ in range(rng.randrange(1, max_len)):
		if len(w) + 2 > max_len:
			break
		g = rng.choice(p.generators)
		e = rng.choice((1, -1))
		pos = rng.randrange(len(w) + 1)
		w = w[:pos] + ((g, e), (g, -e)) + w[pos:]
	# scramble with random commutations so cancellation is not adjacent
	for _ in range(4 * len(w)):
		if len(w) < 2:
			break
		i = rng.randrange(len(w) - 1)
		if w[i][0] != w[i + 1][0] and p.commutes(w[i][0], w[i + 1][0]):
			w = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
	return w
