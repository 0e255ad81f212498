import pytest

from artincalc import parse_word, parse_positive
from artincalc.cayley import (CayleyFragment, FragmentError, divisor_fragment,
	traced_from, closure_probe, non_reachability_certificate, to_dot)
from artincalc.monoid import canonical

from helpers import A2, I24, RA2


def test_divisor_fragment_vertices():
	f = divisor_fragment(I24, parse_positive('ababb', I24))
	assert {''.join(v) for v in f.vertices} == {'', 'a', 'ab', 'aba', 'abab',
		'ababb', 'b', 'ba', 'bab', 'bb', 'bba', 'bbab'}
	assert f.base == ('a', 'b', 'a', 'b', 'b')
	f = divisor_fragment(A2, parse_positive('aba', A2))
	assert {''.join(v) for v in f.vertices} == {'', 'a', 'ab', 'aba', 'b', 'ba'}
	f = divisor_fragment(A2, parse_positive('a', A2))
	assert len(f.vertices) == 2 and len(f.edges) == 1


def test_fragment_edges_consistent():
	for p, g in ((A2, 'aba'), (I24, 'ababb'), (RA2, 'abab')):
		f = divisor_fragment(p, parse_positive(g, p))
		for u, s, t in f.edges:
			assert u in f.vertices and t in f.vertices
			assert canonical(p, u + (s,)) == t
			assert f.forward(u, s) == t and f.backward(t, s) == u


def test_traced_from():
	f = divisor_fragment(I24, parse_positive('ababb', I24))
	ok, path = traced_from(f, ('a',), parse_word('AbbabaB', I24))
	assert ok and len(path) == 8
	assert path[0] == ('a',) and path[-1] == ('a', 'b', 'a', 'b')
	# from a the letter a has no forward edge (aa is not a divisor)
	ok, pos = traced_from(f, ('a',), parse_word('ababA', I24))
	assert not ok and pos == 0
	ok, path = traced_from(f, ('a',), parse_word('bab', I24))
	assert ok and path[-1] == ('a', 'b', 'a', 'b')
	with pytest.raises(FragmentError):
		traced_from(f, ('a', 'a'), ())


def test_closure_probe_no_violations():
	f = divisor_fragment(I24, parse_positive('ababb', I24))
	rep = closure_probe(I24, f, ('a',), parse_word('AbbabaB', I24),
		trials=1000, walk_len=10, seed=5)
	assert rep['violations'] == []
	assert rep['successors_checked'] > 0
	with pytest.raises(FragmentError):
		closure_probe(I24, f, ('a',), parse_word('ababA', I24))


def test_non_reachability_certificate():
	g = parse_positive('ababb', I24)
	w = parse_word('AbbabaB', I24)
	w2 = parse_word('ababA', I24)
	cert = non_reachability_certificate(I24, g, ('a',), w, w2)
	assert cert is not None
	assert cert.traced_word == w and cert.untraced_word == w2
	assert cert.failure_position == 0
	# no certificate when both trace
	assert non_reachability_certificate(I24, g, ('a',), w, w) is None


def test_to_dot():
	f = divisor_fragment(A2, parse_positive('a', A2))
	dot = to_dot(f, A2)
	assert dot.startswith('digraph') and '"1"' in dot and 'label="a"' in dot


def test_duplicate_in_edge_rejected():
	with pytest.raises(FragmentError, match='left-cancellativity'):
		CayleyFragment((), frozenset({(), ('a',), ('b',)}),
			frozenset({((), 'a', ('a',)), (('b',), 'a', ('a',))}))
