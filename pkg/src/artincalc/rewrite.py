''' The five special transformation types, Dehn transformations, step
enumeration, application, and derivation replay.

Step kinds:
	'0'    remove an adjacent trivial pair (sign field: +1 for s s^-1, -1 for s^-1 s)
	'1'    replace a relation side by the other (sign -1: the inverse factors)
	'2r'   replace v^-1 v' by u u'^-1 where v u = v' u' is a relation
	'2l'   replace v v'^-1 by u^-1 u' where u v = u' v' is a relation
	'inf'  insert a trivial pair (letter, sign of the first inserted letter)

Positions index letter boundaries 0..len(w); a step's position is the start
of the affected factor.  For type 2 the orientation 'fwd' reads the stored
relation as (lhs, rhs) = (v side, v' side); 'bwd' swaps them.  lv and lvp
are |v| and |v'|.
'''

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .core import invert, positive_to_word, render_word, parse_word

KINDS = ('0', '1', '2r', '2l', 'inf')


class StepError(ValueError):
	pass


@dataclass(frozen=True)
class Step:
	kind: str
	pos: int
	rel: int = None
	orient: str = None  # 'fwd' or 'bwd'
	lv: int = None      # |v|  (type 2)
	lvp: int = None     # |v'| (type 2)
	letter: str = None  # type 0 / inf
	sign: int = None    # type 0 / inf pair order; type 1 inverse-factor flag

	def to_json(self):
		d = {'pos': self.pos}
		if self.kind == '0':
			d['kind'] = '0r' if self.sign == 1 else '0l'
		elif self.kind == 'inf':
			d['kind'] = 'inf'
			d['letter'] = self.letter
			d['sign'] = self.sign
		elif self.kind == '1':
			d['kind'] = '1'
			d['rel'] = self.rel
			d['orient'] = self.orient
			d['sign'] = self.sign
		else:
			d['kind'] = self.kind
			d['rel'] = self.rel
			d['orient'] = self.orient
			# the schema carries a single split index; pack both lengths
			d['split'] = (self.lv - 1) * 64 + (self.lvp - 1)
		return d

	@classmethod
	def from_json(cls, d):
		kind = d['kind']
		if kind in ('0r', '0l'):
			return cls('0', d['pos'], sign=1 if kind == '0r' else -1)
		if kind == 'inf':
			return cls('inf', d['pos'], letter=d['letter'], sign=d['sign'])
		if kind == '1':
			return cls('1', d['pos'], rel=d['rel'], orient=d['orient'], sign=d.get('sign', 1))
		split = d['split']
		return cls(kind, d['pos'], rel=d['rel'], orient=d['orient'],
			lv=split // 64 + 1, lvp=split % 64 + 1)


def oriented_relation(p, step):
	l, r = p.relations[step.rel]
	return (l, r) if step.orient == 'fwd' else (r, l)


def apply_step(p, w, s):
	'''Apply one step; raises StepError on any pattern mismatch.'''
	n = len(w)
	if s.kind == '0':
		if s.pos + 2 > n:
			raise StepError('type 0 out of range')
		(g1, e1), (g2, e2) = w[s.pos], w[s.pos + 1]
		if g1 != g2 or e1 != -e2 or e1 != s.sign:
			raise StepError('no trivial pair at %d' % s.pos)
		return w[:s.pos] + w[s.pos + 2:]
	if s.kind == 'inf':
		if not 0 <= s.pos <= n:
			raise StepError('insertion position out of range')
		if s.letter not in p.generators:
			raise StepError('unknown letter %r' % s.letter)
		pair = ((s.letter, s.sign), (s.letter, -s.sign))
		return w[:s.pos] + pair + w[s.pos:]
	if s.kind == '1':
		src, dst = oriented_relation(p, s)
		factor = positive_to_word(src) if s.sign != -1 else invert(positive_to_word(src))
		new = positive_to_word(dst) if s.sign != -1 else invert(positive_to_word(dst))
		if w[s.pos:s.pos + len(factor)] != factor:
			raise StepError('type 1 factor mismatch at %d' % s.pos)
		return w[:s.pos] + new + w[s.pos + len(factor):]
	if s.kind == '2r':
		l, r = oriented_relation(p, s)
		if not (1 <= s.lv <= len(l) and 1 <= s.lvp <= len(r)):
			raise StepError('bad type 2r split')
		v, u = l[:s.lv], l[s.lv:]
		vp, up = r[:s.lvp], r[s.lvp:]
		factor = invert(positive_to_word(v)) + positive_to_word(vp)
		if w[s.pos:s.pos + len(factor)] != factor:
			raise StepError('type 2r factor mismatch at %d' % s.pos)
		new = positive_to_word(u) + invert(positive_to_word(up))
		return w[:s.pos] + new + w[s.pos + len(factor):]
	if s.kind == '2l':
		l, r = oriented_relation(p, s)
		if not (1 <= s.lv <= len(l) and 1 <= s.lvp <= len(r)):
			raise StepError('bad type 2l split')
		u, v = l[:len(l) - s.lv], l[len(l) - s.lv:]
		up, vp = r[:len(r) - s.lvp], r[len(r) - s.lvp:]
		factor = positive_to_word(v) + invert(positive_to_word(vp))
		if w[s.pos:s.pos + len(factor)] != factor:
			raise StepError('type 2l factor mismatch at %d' % s.pos)
		new = invert(positive_to_word(u)) + positive_to_word(up)
		return w[:s.pos] + new + w[s.pos + len(factor):]
	raise StepError('unknown step kind %r' % s.kind)


def applicable_steps(p, w, kinds, inf_letters=None, inf_positions=None):
	'''All applicable steps of the requested kinds, in deterministic order
	(position, kind, relation, split).  Kind 'inf' is an infinite family
	and is only enumerated when an explicit letter list is supplied.'''
	if 'inf' in kinds and inf_letters is None:
		raise StepError("kind 'inf' requires an explicit inf_letters bound")
	# factor tables, in enumeration order, built once per call
	tables = {}
	if '1' in kinds:
		tables['1'] = [
			(positive_to_word(src) if sg == 1 else invert(positive_to_word(src)),
				dict(rel=ri, orient=orient, sign=sg))
			for ri, (l, r) in enumerate(p.relations)
			for orient, src in (('fwd', l), ('bwd', r))
			for sg in (1, -1)]
	for kind in ('2r', '2l'):
		if kind not in kinds:
			continue
		rows = []
		for ri, (l, r) in enumerate(p.relations):
			for orient, a, b in (('fwd', l, r), ('bwd', r, l)):
				for lv in range(1, len(a) + 1):
					for lvp in range(1, len(b) + 1):
						if kind == '2r':
							fac = invert(positive_to_word(a[:lv])) + positive_to_word(b[:lvp])
						else:
							fac = positive_to_word(a[-lv:]) + invert(positive_to_word(b[-lvp:]))
						rows.append((fac, dict(rel=ri, orient=orient, lv=lv, lvp=lvp)))
		tables[kind] = rows
	out = []
	n = len(w)
	for pos in range(n + 1):
		for kind in KINDS:
			if kind not in kinds:
				continue
			if kind == '0' and pos + 2 <= n:
				(g1, e1), (g2, e2) = w[pos], w[pos + 1]
				if g1 == g2 and e1 == -e2:
					out.append(Step('0', pos, sign=e1))
			elif kind in ('1', '2r', '2l'):
				for factor, kw in tables[kind]:
					if pos + len(factor) <= n and w[pos:pos + len(factor)] == factor:
						out.append(Step(kind, pos, **kw))
			elif kind == 'inf':
				for g in inf_letters:
					for sg in (1, -1):
						if inf_positions is None or pos in inf_positions:
							out.append(Step('inf', pos, letter=g, sign=sg))
	return out


@dataclass
class Derivation:
	start: tuple
	steps: list

	def to_json(self, p):
		end = check_derivation(p, self)
		return {
			'schema': 1,
			'start': render_word(self.start, p),
			'steps': [s.to_json() for s in self.steps],
			'end': render_word(end, p),
		}

	@classmethod
	def from_json(cls, d, p):
		if d.get('schema') != 1:
			raise StepError('unsupported derivation schema %r' % d.get('schema'))
		der = cls(parse_word(d['start'], p), [Step.from_json(s) for s in d['steps']])
		end = check_derivation(p, der)
		if render_word(end, p) != d['end']:
			raise StepError('derivation end mismatch: %r != %r'
				% (render_word(end, p), d['end']))
		return der


def check_derivation(p, d):
	'''Replay a derivation, returning the final word; the index of the
	first inapplicable step is reported on failure.'''
	w = tuple(d.start)
	for i, s in enumerate(d.steps):
		try:
			w = apply_step(p, w, s)
		except StepError as e:
			raise StepError('step %d inapplicable: %s' % (i, e)) from None
	return w


def derivation_words(p, d):
	'''All intermediate words, start included.'''
	words = [tuple(d.start)]
	for s in d.steps:
		words.append(apply_step(p, words[-1], s))
	return words


# ---------------------------------------------------------------------------
# Dehn transformations

@dataclass(frozen=True)
class DehnStep:
	pos: int
	factor: tuple
	replacement: tuple
	rel: int
	orient: str  # 'fwd': u^-1 u' is a cyclic shift of v^-1 v'; 'bwd': of v'^-1 v
	shift: int


def dehn_steps(p, w):
	'''All length-decreasing factor replacements u -> u' with u^-1 u' a
	cyclic permutation of v^-1 v' or v'^-1 v for some relation v = v'.
	Cyclic shifts are taken at letter boundaries.'''
	out = []
	seen = set()
	for ri, (l, r) in enumerate(p.relations):
		for orient, a, b in (('fwd', l, r), ('bwd', r, l)):
			z = invert(positive_to_word(a)) + positive_to_word(b)
			for shift in range(len(z)):
				c = z[shift:] + z[:shift]
				# u^-1 u' = c with |u| > |u'|
				for k in range(len(c) // 2 + 1, len(c) + 1):
					u = invert(c[:k])
					up = c[k:]
					for pos in range(len(w) - len(u) + 1):
						if w[pos:pos + len(u)] == u:
							key = (pos, u, up)
							if key in seen:
								continue
							seen.add(key)
							out.append(DehnStep(pos, u, up, ri, orient, shift))
	out.sort(key=lambda d: (d.pos, -len(d.factor), d.rel, d.orient, d.shift))
	return out


def apply_dehn(w, d):
	if w[d.pos:d.pos + len(d.factor)] != d.factor:
		raise StepError('Dehn factor mismatch at %d' % d.pos)
	return w[:d.pos] + d.replacement + w[d.pos + len(d.factor):]


# ---------------------------------------------------------------------------
# simulation of type 2 by {inf, 1, 0}

def simulate_type2(p, w, s):
	'''A derivation from w to apply_step(p, w, s) using only insertion,
	type 1, and type 0 steps.  Used to manufacture {0,1,inf} derivations
	when exercising the elimination algorithm.'''
	if s.kind not in ('2r', '2l'):
		raise StepError('simulate_type2 needs a type 2 step')
	apply_step(p, w, s)  # applicability check
	l, r = oriented_relation(p, s)
	steps = []
	if s.kind == '2r':
		# ... v^-1 v' ...  ->  ... v^-1 v' u' u'^-1 ...  ->  ... v^-1 v u u'^-1 ...
		vp, up = r[:s.lvp], r[s.lvp:]
		end = s.pos + s.lv + s.lvp
		for i, g in enumerate(up):
			steps.append(Step('inf', end + i, letter=g, sign=1))
		steps.append(Step('1', s.pos + s.lv, rel=s.rel,
			orient='bwd' if s.orient == 'fwd' else 'fwd', sign=1))
		for i in range(s.lv):
			steps.append(Step('0', s.pos + s.lv - 1 - i, sign=-1))
	else:
		# ... v v'^-1 ...  ->  ... u^-1 u v v'^-1 ...  ->  ... u^-1 u' v' v'^-1 ...
		u = l[:len(l) - s.lv]
		for i in range(len(u)):
			g = u[len(u) - 1 - i]
			steps.append(Step('inf', s.pos + i, letter=g, sign=-1))
		steps.append(Step('1', s.pos + len(u), rel=s.rel, orient=s.orient, sign=1))
		off = s.pos + len(u) + len(r)
		for i in range(s.lvp):
			steps.append(Step('0', off - 1 - i, sign=1))
	d = Derivation(w, steps)
	end_word = check_derivation(p, d)
	want = apply_step(p, w, s)
	if end_word != want:
		raise StepError('type 2 simulation mismatch')
	return d
