import random

import pytest
from hypothesis import given, settings, strategies as st

from artincalc import (Step, Derivation, applicable_steps, apply_step,
	check_derivation, dehn_steps, apply_dehn, simulate_type2, parse_word,
	render_word, invert)
from artincalc.rewrite import StepError, derivation_words
from artincalc.core import positive_to_word

from helpers import A2, I24, RA2, RA3, F2XF2, FIG2, HomOracle, random_word

ALL = {'0', '1', '2r', '2l'}


def test_apply_type0():
	assert apply_step(A2, parse_word('aA', A2), Step('0', 0, sign=1)) == ()
	assert apply_step(A2, parse_word('Aa', A2), Step('0', 0, sign=-1)) == ()
	with pytest.raises(StepError):
		apply_step(A2, parse_word('aA', A2), Step('0', 0, sign=-1))
	with pytest.raises(StepError):
		apply_step(A2, parse_word('ab', A2), Step('0', 0, sign=1))


def test_apply_type1_inverse_factor_mismatch():
	# relation ab = ba applied to inverse factors needs the factor (ab)^-1 =
	# "BA"; the word "aB" has no such factor anywhere
	s = Step('1', 0, rel=0, orient='fwd', sign=-1)
	with pytest.raises(StepError):
		apply_step(RA2, parse_word('aB', RA2), s)


def test_apply_type1_inverse_factor():
	w = parse_word('BA', RA2)  # (ab)^-1
	s = Step('1', 0, rel=0, orient='fwd', sign=-1)
	assert render_word(apply_step(RA2, w, s), RA2) == 'AB'


def test_apply_type2r_pin():
	# split (b)(ab) = (a)(ba) of bab = aba: replaces b^-1 a by ab(ab)^-1...
	w = parse_word('Ba', A2)
	steps = applicable_steps(A2, w, {'2r'})
	assert len(steps) == 1
	assert render_word(apply_step(A2, w, steps[0]), A2) == 'abAB'


def test_apply_type2l_pin():
	w = parse_word('aB', A2)
	steps = applicable_steps(A2, w, {'2l'})
	assert len(steps) == 1
	assert render_word(apply_step(A2, w, steps[0]), A2) == 'BAba'


def test_applicable_steps_dead_word():
	w = parse_word('ACdaBDcb', FIG2)
	assert applicable_steps(FIG2, w, ALL) == []


def test_applicable_steps_requires_inf_bound():
	with pytest.raises(StepError):
		applicable_steps(A2, parse_word('a', A2), {'0', 'inf'})
	steps = applicable_steps(A2, (), {'inf'}, inf_letters=('a',))
	assert steps == [Step('inf', 0, letter='a', sign=1),
		Step('inf', 0, letter='a', sign=-1)]


def test_applicable_steps_deterministic_and_eligible():
	rng = random.Random(7)
	for p in (A2, I24, RA3, F2XF2):
		for _ in range(30):
			w = random_word(p, rng, rng.randrange(0, 9))
			steps = applicable_steps(p, w, ALL)
			assert steps == applicable_steps(p, w, ALL)
			assert [s.pos for s in steps] == sorted(s.pos for s in steps)
			for s in steps:
				apply_step(p, w, s)  # must not raise


def brute_type1_results(p, w):
	'''Independent enumeration of type-1 successors straight from the
	definition: replace a factor equal to a relation side (or its formal
	inverse) by the other side (resp. its inverse).'''
	out = set()
	for l, r in p.relations:
		for src, dst in ((l, r), (r, l)):
			for fac, new in (
					(positive_to_word(src), positive_to_word(dst)),
					(invert(positive_to_word(src)), invert(positive_to_word(dst)))):
				for i in range(len(w) - len(fac) + 1):
					if w[i:i + len(fac)] == fac:
						out.add(w[:i] + new + w[i + len(fac):])
	return out


def test_type1_enumeration_matches_definition():
	rng = random.Random(11)
	for p in (A2, I24, RA3, FIG2):
		for _ in range(40):
			w = random_word(p, rng, rng.randrange(0, 10))
			got = {apply_step(p, w, s) for s in applicable_steps(p, w, {'1'})}
			assert got == brute_type1_results(p, w)


def brute_type2_results(p, w, kind):
	out = set()
	for l, r in p.relations:
		for a, b in ((l, r), (r, l)):
			for lv in range(1, len(a) + 1):
				for lvp in range(1, len(b) + 1):
					if kind == '2r':
						fac = invert(positive_to_word(a[:lv])) + positive_to_word(b[:lvp])
						new = positive_to_word(a[lv:]) + invert(positive_to_word(b[lvp:]))
					else:
						fac = positive_to_word(a[-lv:]) + invert(positive_to_word(b[-lvp:]))
						new = invert(positive_to_word(a[:-lv])) + positive_to_word(b[:-lvp])
					for i in range(len(w) - len(fac) + 1):
						if w[i:i + len(fac)] == fac:
							out.add(w[:i] + new + w[i + len(fac):])
	return out


@pytest.mark.parametrize('kind', ['2r', '2l'])
def test_type2_enumeration_matches_definition(kind):
	rng = random.Random(13)
	for p in (A2, I24, FIG2):
		for _ in range(40):
			w = random_word(p, rng, rng.randrange(0, 8))
			got = {apply_step(p, w, s) for s in applicable_steps(p, w, {kind})}
			assert got == brute_type2_results(p, w, kind)


def test_steps_preserve_group_element():
	rng = random.Random(3)
	for p in (A2, I24, RA3, F2XF2):
		oracle = HomOracle(p, seed=5)
		for _ in range(25):
			w = random_word(p, rng, rng.randrange(0, 8))
			for s in applicable_steps(p, w, ALL):
				assert oracle.maybe_equal(w, apply_step(p, w, s)), s
			for pos in range(len(w) + 1):
				s = Step('inf', pos, letter=rng.choice(p.generators),
					sign=rng.choice((1, -1)))
				assert oracle.maybe_equal(w, apply_step(p, w, s))


step_jsons = st.one_of(
	st.builds(lambda pos, sg: Step('0', pos, sign=sg),
		st.integers(0, 30), st.sampled_from((1, -1))),
	st.builds(lambda pos, rel, o, sg: Step('1', pos, rel=rel, orient=o, sign=sg),
		st.integers(0, 30), st.integers(0, 5),
		st.sampled_from(('fwd', 'bwd')), st.sampled_from((1, -1))),
	st.builds(lambda k, pos, rel, o, lv, lvp:
		Step(k, pos, rel=rel, orient=o, lv=lv, lvp=lvp),
		st.sampled_from(('2r', '2l')), st.integers(0, 30), st.integers(0, 5),
		st.sampled_from(('fwd', 'bwd')), st.integers(1, 12), st.integers(1, 12)),
	st.builds(lambda pos, g, sg: Step('inf', pos, letter=g, sign=sg),
		st.integers(0, 30), st.sampled_from('abc'), st.sampled_from((1, -1))),
)


@given(step_jsons)
def test_step_json_round_trip(s):
	assert Step.from_json(s.to_json()) == s


def test_derivation_json_round_trip():
	w = parse_word('Ba', A2)
	s = applicable_steps(A2, w, {'2r'})[0]
	d = Derivation(w, [s])
	blob = d.to_json(A2)
	assert blob['schema'] == 1 and blob['end'] == 'abAB'
	d2 = Derivation.from_json(blob, A2)
	assert d2.start == w and d2.steps == [s]
	blob['end'] = 'ab'
	with pytest.raises(StepError):
		Derivation.from_json(blob, A2)


def test_check_derivation_reports_first_bad_step():
	d = Derivation(parse_word('aA', A2),
		[Step('0', 0, sign=1), Step('0', 0, sign=1)])
	with pytest.raises(StepError, match='step 1'):
		check_derivation(A2, d)
	assert check_derivation(A2, Derivation(parse_word('ab', A2), [])) \
		== parse_word('ab', A2)


def test_derivation_words():
	w = parse_word('aA', A2)
	d = Derivation(w, [Step('0', 0, sign=1)])
	assert derivation_words(A2, d) == [w, ()]


def test_dehn_steps_commutation():
	# relator abAB: the whole word is one big factor, and every >half
	# subword yields a shortening
	w = parse_word('abABb', RA2)
	got = {(render_word(d.factor, RA2), render_word(d.replacement, RA2),
		render_word(apply_dehn(w, d), RA2)) for d in dehn_steps(RA2, w)}
	assert got == {('abAB', '', 'b'), ('abA', 'b', 'bBb'), ('bAB', 'A', 'aAb')}


def test_dehn_steps_no_strict_decrease():
	assert dehn_steps(I24, parse_word('abab', I24)) == []
	assert dehn_steps(A2, ()) == []


def test_dehn_steps_sound_and_decreasing():
	rng = random.Random(17)
	for p in (A2, I24, RA3):
		oracle = HomOracle(p, seed=2)
		for _ in range(25):
			w = random_word(p, rng, rng.randrange(0, 8))
			for d in dehn_steps(p, w):
				assert len(d.replacement) < len(d.factor)
				assert oracle.maybe_equal(w, apply_dehn(w, d))


def test_simulate_type2_matches_apply():
	rng = random.Random(19)
	for p in (A2, I24, RA3):
		for _ in range(30):
			w = random_word(p, rng, rng.randrange(0, 7))
			for s in applicable_steps(p, w, {'2r', '2l'}):
				d = simulate_type2(p, w, s)
				assert all(t.kind in ('inf', '1', '0') for t in d.steps)
				assert check_derivation(p, d) == apply_step(p, w, s)


def test_simulate_type2_rejects_other_kinds():
	with pytest.raises(StepError):
		simulate_type2(A2, parse_word('aA', A2), Step('0', 0, sign=1))
