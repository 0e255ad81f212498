''' Desk-scale positive-word monoid arithmetic by exhaustive closure under
length-preserving relation rewrites: equivalence classes, divisibility,
right lcm via reversing, S0-minimality, and the spherical coset-head
construction.

Classes are memoized per presentation in-process; setting ARTIN_CACHE_DIR
adds a JSON file cache keyed by a presentation fingerprint.  Results are
identical with or without the cache.
'''

from __future__ import annotations

import json
import os
import hashlib
from collections import deque

from .core import invert, positive_to_word, word_to_positive
from .rewrite import Step, Derivation
from .reversing import right_reverse, left_fraction, split_pos_neg, ReversingError

DEFAULT_CAP = 100000

_class_cache = {}


class CapExceeded(RuntimeError):
	pass


def _rewrites(p, w):
	'''One-step type-1 rewrites of a positive word, both directions.'''
	n = len(w)
	for ri, (l, r) in enumerate(p.relations):
		for src, dst in ((l, r), (r, l)):
			k = len(src)
			for i in range(n - k + 1):
				if w[i:i + k] == src:
					yield w[:i] + dst + w[i + k:]


def _disk_path(p, w):
	root = os.environ.get('ARTIN_CACHE_DIR')
	if not root:
		return None
	key = hashlib.sha256((p.fingerprint() + '|' + ' '.join(w)).encode()).hexdigest()
	return os.path.join(root, key + '.json')


def equiv_class(p, w, cap=DEFAULT_CAP):
	'''BFS closure of a positive word under relation rewrites.  Complete
	for length-preserving presentations; the cap guards the general case.'''
	w = tuple(w)
	key = (p.fingerprint(), w)
	hit = _class_cache.get(key)
	if hit is not None:
		return hit
	path = _disk_path(p, w)
	if path and os.path.exists(path):
		with open(path) as f:
			cls = frozenset(tuple(m) for m in json.load(f))
		_class_cache[key] = cls
		return cls
	seen = {w}
	queue = deque([w])
	while queue:
		cur = queue.popleft()
		for nxt in _rewrites(p, cur):
			if nxt not in seen:
				if len(seen) >= cap:
					raise CapExceeded('equivalence class exceeds cap %d' % cap)
				seen.add(nxt)
				queue.append(nxt)
	cls = frozenset(seen)
	for m in cls:
		_class_cache[(p.fingerprint(), m)] = cls
	if path:
		os.makedirs(os.path.dirname(path), exist_ok=True)
		with open(path, 'w') as f:
			json.dump(sorted(list(m) for m in cls), f)
	return cls


def canonical(p, w, cap=DEFAULT_CAP):
	'''Lexicographically least class member under the generator order.'''
	order = {g: i for i, g in enumerate(p.generators)}
	return min(equiv_class(p, w, cap), key=lambda m: [order[g] for g in m])


def pos_equal(p, u, v, cap=DEFAULT_CAP):
	return tuple(v) in equiv_class(p, u, cap)


def rewrite_path(p, u, v, cap=DEFAULT_CAP):
	'''A list of type-1 Steps transforming the positive word u into the
	positive word v (exact words, not classes).'''
	u, v = tuple(u), tuple(v)
	if v not in equiv_class(p, u, cap):
		raise ValueError('words are not equivalent')
	parent = {u: None}
	queue = deque([u])
	while queue and v not in parent:
		cur = queue.popleft()
		for ri, (l, r) in enumerate(p.relations):
			for orient, src, dst in (('fwd', l, r), ('bwd', r, l)):
				k = len(src)
				for i in range(len(cur) - k + 1):
					if cur[i:i + k] == src:
						nxt = cur[:i] + dst + cur[i + k:]
						if nxt not in parent:
							parent[nxt] = (cur, Step('1', i, rel=ri, orient=orient, sign=1))
							queue.append(nxt)
	steps = []
	node = v
	while parent[node] is not None:
		prev, step = parent[node]
		steps.append(step)
		node = prev
	steps.reverse()
	return steps


def left_divisors(p, g, cap=DEFAULT_CAP):
	'''Canonical forms of all prefixes of all class members of g.'''
	divs = set()
	for m in equiv_class(p, g, cap):
		for k in range(len(m) + 1):
			divs.add(canonical(p, m[:k], cap))
	return frozenset(divs)


def right_divides(p, d, g, cap=DEFAULT_CAP):
	'''True iff some class member of g has a suffix equivalent to d.'''
	d, g = tuple(d), tuple(g)
	if len(d) > len(g):
		return False if p.length_preserving else any(
			m[len(m) - len(d):] in equiv_class(p, d, cap)
			for m in equiv_class(p, g, cap) if len(m) >= len(d))
	dcls = equiv_class(p, d, cap)
	return any(m[len(m) - len(d):] in dcls for m in equiv_class(p, g, cap))


def right_lcm(p, u, v, budget=10000, cap=DEFAULT_CAP):
	'''Least common right-multiple via reversing: u^-1 v reverses to
	a b^-1 and the lcm is u a (equivalently v b).  Returns the canonical
	word of the lcm.'''
	u, v = tuple(u), tuple(v)
	res = right_reverse(p, invert(positive_to_word(u)) + positive_to_word(v), budget)
	if not res.converged:
		raise ReversingError(res.blocked or 'lcm reversal budget exhausted')
	a, b = split_pos_neg(res.word)
	lcm = canonical(p, u + a, cap)
	assert pos_equal(p, lcm, v + b, cap), 'reversing produced unequal multiples'
	return lcm


def brute_right_lcm(p, u, v, max_len=12, cap=DEFAULT_CAP):
	'''Independent oracle: smallest-length common right-multiple found by
	enumerating positive words by length.  None if none exists in range.'''
	u, v = tuple(u), tuple(v)
	frontier = [()]
	for _ in range(max_len + 1):
		for w in frontier:
			if right_is_multiple(p, w, u, cap) and right_is_multiple(p, w, v, cap):
				return canonical(p, w, cap)
		frontier = [w + (g,) for w in frontier for g in p.generators]
	return None


def right_is_multiple(p, w, u, cap=DEFAULT_CAP):
	'''True iff u left-divides w.'''
	if len(u) > len(w):
		return False
	ucls = equiv_class(p, u, cap)
	return any(m[:len(u)] in ucls for m in equiv_class(p, w, cap))


# ---------------------------------------------------------------------------
# S0-minimality and coset heads

def is_S0_minimal(p, g, s0, cap=DEFAULT_CAP):
	'''No generator of S0 right-divides g.  Letterwise suffices: every
	nontrivial element of the S0-submonoid ends in an S0 generator.'''
	s0 = set(s0)
	if not s0:
		return True
	return not any(m and m[-1] in s0 for m in equiv_class(p, g, cap))


def strip_S0(p, g, s0, cap=DEFAULT_CAP):
	'''Greedily strip S0 letters from the right: head * tail ~ g with the
	head S0-minimal and the tail a positive word over S0.'''
	head, tail, _ = _strip_with_path(p, tuple(g), set(s0), cap)
	return canonical(p, head, cap), tail


def _strip_with_path(p, g, s0, cap):
	'''As strip_S0, but also returns type-1 steps from g to the literal
	word head + tail.'''
	order = {gen: i for i, gen in enumerate(p.generators)}
	cur = tuple(g)
	tail = ()
	steps = []
	while True:
		cands = [m for m in equiv_class(p, cur, cap) if m and m[-1] in s0]
		if not cands:
			break
		m = min(cands, key=lambda m: [order[x] for x in m])
		steps.extend(rewrite_path(p, cur, m, cap))
		tail = (m[-1],) + tail
		cur = m[:-1]
	return cur, tail, steps


def coset_head_spherical(p, w, s0, budget=10000, cap=DEFAULT_CAP,
		validate_len=4):
	'''Split w as v u with u a word over S0 and v an S0-minimal coset
	representative, with a {0,1,2} trace from w to v u.

	Construction: compute the left fraction g1^-1 g2 of w, strip the S0
	tail off the numerator g2, and validate minimality by bounded
	enumeration over signed S0 words h of length <= validate_len: no h may
	lower (|left denominator|, |left numerator|) lexicographically.
	'''
	if not p.declared_spherical:
		raise ReversingError('presentation not declared spherical')
	s0 = set(s0)
	frac = left_fraction(p, w, budget)
	g1, g2 = frac.denominator, frac.numerator
	head, tail, strip_steps = _strip_with_path(p, g2, s0, cap)
	# positions of the strip rewrites are offsets inside g2, which starts
	# after the |g1| negative letters of the reversed word
	offset = len(g1)
	steps = frac.trace.steps + [
		Step(st.kind, st.pos + offset, rel=st.rel, orient=st.orient, sign=st.sign)
		for st in strip_steps]
	v = invert(positive_to_word(g1)) + positive_to_word(head)
	u = positive_to_word(tail)
	trace = Derivation(tuple(w), steps)
	_validate_minimality(p, v, s0, budget, validate_len)
	return v, u, trace


def _fraction_profile(p, w, budget):
	f = left_fraction(p, w, budget)
	return (len(f.denominator), len(f.numerator))


def _validate_minimality(p, v, s0, budget, validate_len):
	'''Bounded check that no S0 element lowers the fraction profile of v.'''
	base = _fraction_profile(p, v, budget)
	letters = [(g, e) for g in sorted(s0) for e in (1, -1)]
	frontier = [()]
	for _ in range(validate_len):
		frontier = [h + (x,) for h in frontier for x in letters]
		for h in frontier:
			prof = _fraction_profile(p, v + h, budget)
			if prof < base:
				raise ReversingError(
					'minimality validation failed: %r lowers the profile' % (h,))
