''' Words, signed letters, positive presentations, parsing, and validation.

A letter is a pair (generator, sign) with sign +1 or -1; a word is a tuple
of letters.  Positive words are tuples of generator names.  In rendered
form we follow the usual convention that lowercase is a positive letter
and uppercase its inverse, so "aB" is a b^-1; multi-character generators
use whitespace-separated tokens with an explicit ^-1.
'''

from __future__ import annotations

from dataclasses import dataclass, field


class WordError(ValueError):
	pass


class PresentationError(ValueError):
	pass


# ---------------------------------------------------------------------------
# words

def invert(w):
	'''Formal inverse: signs flipped, order reversed.'''
	return tuple((g, -e) for g, e in reversed(w))


def positive_to_word(u):
	return tuple((g, 1) for g in u)


def is_positive(w):
	return all(e == 1 for _, e in w)


def word_to_positive(w):
	if not is_positive(w):
		raise WordError('word contains inverse letters: %r' % (w,))
	return tuple(g for g, _ in w)


def free_reduce(w):
	'''Delete adjacent s s^-1 and s^-1 s pairs until none remains.'''
	out = []
	for let in w:
		if out and out[-1][0] == let[0] and out[-1][1] == -let[1]:
			out.pop()
		else:
			out.append(let)
	return tuple(out)


# ---------------------------------------------------------------------------
# presentations

@dataclass(frozen=True)
class Presentation:
	'''A positive presentation (S, R).

	generators: ordered generator names; relations: pairs of nonempty
	positive words.  declared_spherical is a user assertion (the paper
	gives no finiteness algorithm); right_angled and length_preserving
	are computed.
	'''
	generators: tuple
	relations: tuple
	declared_spherical: bool = False

	def __post_init__(self):
		object.__setattr__(self, 'generators', tuple(self.generators))
		object.__setattr__(self, 'relations',
			tuple((tuple(l), tuple(r)) for l, r in self.relations))
		rep = validate(self)
		if rep['errors']:
			raise PresentationError('; '.join(rep['errors']))

	@property
	def right_angled(self):
		return all(len(l) == 2 and len(r) == 2 and l[0] != l[1]
			and (r[0], r[1]) == (l[1], l[0]) for l, r in self.relations)

	@property
	def length_preserving(self):
		return all(len(l) == len(r) for l, r in self.relations)

	def commutes(self, s, t):
		'''True iff st = ts is (up to orientation) a relation.'''
		return ((s, t), (t, s)) in self.relations or ((t, s), (s, t)) in self.relations

	def fingerprint(self):
		return repr((self.generators, self.relations))


def validate(p):
	'''Classification report: positivity violations and computed flags.'''
	errors = []
	seen = set()
	for g in p.generators:
		if not g or any(ch.isspace() for ch in g):
			errors.append('bad generator name %r' % g)
		if g in seen:
			errors.append('duplicate generator %r' % g)
		seen.add(g)
	for i, (l, r) in enumerate(p.relations):
		if not l or not r:
			errors.append('relation %d has an empty side' % i)
		for g in l + r:
			if g not in seen:
				errors.append('relation %d uses unknown generator %r' % (i, g))
	return {
		'valid': not errors,
		'errors': errors,
		'right_angled': not errors and p.right_angled,
		'length_preserving': not errors and p.length_preserving,
	}


class CoxeterMatrix:
	'''Symmetric map (s,t) -> m in {2,3,...} or None for infinity (s != t).'''

	def __init__(self, generators, entries=None):
		self.generators = tuple(generators)
		self.entries = {}
		if entries:
			for (s, t), m in entries.items():
				self.set(s, t, m)

	def set(self, s, t, m):
		if s == t:
			raise PresentationError('diagonal Coxeter entry (%r,%r)' % (s, t))
		if s not in self.generators or t not in self.generators:
			raise PresentationError('unknown generator in Coxeter entry (%r,%r)' % (s, t))
		if m is not None and (not isinstance(m, int) or m < 2):
			raise PresentationError('Coxeter entry must be an integer >= 2 or None, got %r' % (m,))
		self.entries[frozenset((s, t))] = m

	def get(self, s, t):
		return self.entries.get(frozenset((s, t)))


def alternating(s, t, m):
	'''The alternating product stst... of length m.'''
	return tuple(s if i % 2 == 0 else t for i in range(m))


def artin_presentation(m, declared_spherical=False):
	'''Presentation with one relation sts... = tst... (length m(s,t)) per
	finite off-diagonal entry; infinite entries contribute no relation.'''
	rels = []
	done = set()
	for i, s in enumerate(m.generators):
		for t in m.generators[i + 1:]:
			key = frozenset((s, t))
			if key in done:
				continue
			done.add(key)
			mm = m.get(s, t)
			if mm is None:
				continue
			rels.append((alternating(s, t, mm), alternating(t, s, mm)))
	return Presentation(m.generators, tuple(rels), declared_spherical=declared_spherical)


# ---------------------------------------------------------------------------
# parsing and rendering

def parse_word(text, p):
	'''Parse a word.  Single-character generators use the case convention
	(lowercase positive, uppercase inverse); otherwise, or when the text
	contains whitespace, tokens are "s" or "s^-1".'''
	text = text.strip()
	if text in ('', 'e'):  # allow an explicit empty-word marker on the CLI
		return ()
	single = all(len(g) == 1 for g in p.generators)
	if single and not any(ch.isspace() for ch in text) and '^' not in text:
		out = []
		for ch in text:
			if ch in p.generators:
				out.append((ch, 1))
			elif ch.lower() in p.generators:
				out.append((ch.lower(), -1))
			else:
				raise WordError('unknown generator %r in %r' % (ch, text))
		return tuple(out)
	out = []
	for tok in text.split():
		if tok.endswith('^-1'):
			g, e = tok[:-3], -1
		else:
			g, e = tok, 1
		if g not in p.generators:
			raise WordError('unknown generator %r in %r' % (g, text))
		out.append((g, e))
	return tuple(out)


def render_word(w, p=None):
	single = all(len(g) == 1 for g, _ in w) if p is None else all(len(g) == 1 for g in p.generators)
	if single:
		return ''.join(g if e == 1 else g.upper() for g, e in w)
	return ' '.join(g if e == 1 else g + '^-1' for g, e in w)


def parse_positive(text, p):
	return word_to_positive(parse_word(text, p))


# ---------------------------------------------------------------------------
# presentation files
#
# Format: 'gens: a b c' lines, 'rel: aba = bab' lines, an optional
# 'coxeter:' block of 'a b 3' triples, '#' comments.

def parse_presentation_text(text):
	gens = None
	rels = []
	cox = []
	in_cox = False
	for raw in text.splitlines():
		line = raw.split('#', 1)[0].strip()
		if not line:
			continue
		if line.startswith('gens:'):
			gens = tuple(line[5:].split())
			in_cox = False
		elif line.startswith('rel:'):
			body = line[4:]
			if '=' not in body:
				raise PresentationError('malformed relation line %r' % raw)
			lhs, rhs = body.split('=', 1)
			rels.append((lhs.strip(), rhs.strip()))
			in_cox = False
		elif line.startswith('coxeter:'):
			in_cox = True
			rest = line[8:].split()
			if rest:
				cox.append(rest)
		elif in_cox:
			cox.append(line.split())
		else:
			raise PresentationError('unrecognized line %r' % raw)
	if gens is None:
		raise PresentationError('missing gens: line')
	shell = Presentation(gens, ())
	relations = [(parse_positive(l, shell), parse_positive(r, shell)) for l, r in rels]
	if cox:
		m = CoxeterMatrix(gens)
		for triple in cox:
			if len(triple) != 3:
				raise PresentationError('malformed coxeter triple %r' % (triple,))
			s, t, val = triple
			m.set(s, t, None if val in ('inf', 'oo') else int(val))
		relations.extend(artin_presentation(m).relations)
	return Presentation(gens, tuple(relations))


def load_presentation(path):
	with open(path, 'r', encoding='utf-8') as f:
		return parse_presentation_text(f.read())
