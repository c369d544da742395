"""Randomized invariants over the transitive catalogue and random polynomials."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from tracecert.boundsearch import exponent_general, fiber_bound
from tracecert.jaccert import JacobianMatrix, integer_determinant, jacobian, symbolic_determinant
from tracecert.permgroup import Permutation
from tracecert.polyring import SparsePolynomial
from tracecert.tracefam import build_family, trace_polynomial

from conftest import CATALOGUE
from test_jaccert import cofactor_det

NAMES = sorted(CATALOGUE)
CASES = settings(max_examples=200, deadline=None)

_systems = {}


def system(name):
    if name not in _systems:
        from tracecert.groups import build_coset_system

        _systems[name] = build_coset_system(CATALOGUE[name])
    return _systems[name]


@st.composite
def group_and_indices(draw):
    cs = system(draw(st.sampled_from(NAMES)))
    j = draw(st.integers(1, cs.r))
    jj = draw(st.integers(1, cs.r))
    return cs, j, jj


@st.composite
def group_element(draw):
    cs = system(draw(st.sampled_from(NAMES)))
    g = cs.group.elements[draw(st.integers(0, len(cs.group) - 1))]
    return cs, g


@st.composite
def exponent_vector(draw, cs):
    a = draw(st.lists(st.integers(0, 2), min_size=cs.r, max_size=cs.r))
    return tuple(a)


@CASES
@given(group_and_indices())
def test_pi_reverses_products(args):
    cs, j, jj = args
    m = cs.index_of(cs.reps[j - 1] * cs.reps[jj - 1])
    assert m <= cs.r
    assert cs.pi(m) == cs.pi(jj) * cs.pi(j)


@CASES
@given(group_and_indices())
def test_pi_fixed_point_free(args):
    cs, j, _ = args
    pj = cs.pi(j)
    if j == 1:
        assert pj.is_identity()
    else:
        assert all(pj(i) != i for i in range(1, cs.n + 1))


@CASES
@given(group_element(), st.integers(1, 10**6))
def test_left_and_right_actions_commute(args, pick):
    cs, g = args
    p = cs.pi(1 + pick % cs.r)
    lam = cs.lam(g)
    assert lam * p == p * lam


@CASES
@given(group_element(), st.data())
def test_lambda_is_left_multiplication(args, data):
    cs, g = args
    lam = cs.lam(g)
    i = data.draw(st.integers(1, cs.n))
    assert lam(i) == cs.index_of(g * cs.reps[i - 1])


@CASES
@given(group_element(), st.data())
def test_trace_is_group_invariant(args, data):
    cs, g = args
    a = data.draw(exponent_vector(cs))
    f = trace_polynomial(cs, a)
    assert f.substitute_permutation(cs.lam(g).images) == f


@st.composite
def small_poly(draw, n):
    terms = {}
    for _ in range(draw(st.integers(0, 6))):
        exps = [0] * n
        for _ in range(draw(st.integers(0, 6))):
            exps[draw(st.integers(0, n - 1))] += 1
        terms[tuple(exps)] = draw(st.integers(-9, 9))
    return SparsePolynomial.from_terms(n, terms)


@CASES
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(small_poly(n), st.lists(st.integers(-5, 5), min_size=n, max_size=n))))
def test_restriction_linear_coefficient_is_derivative(args):
    f, base = args
    for v in range(1, f.nvars + 1):
        coeffs = f.univariate_restriction(base, v)
        assert coeffs[0] == f.evaluate(base)
        assert (coeffs[1] if len(coeffs) > 1 else 0) == f.partial_derivative(v).evaluate(base)
        # the full restriction reproduces f along the line
        for s in (-2, 3):
            pt = list(base)
            pt[v - 1] += s
            assert sum(c * s**e for e, c in enumerate(coeffs)) == f.evaluate(pt)


@CASES
@given(st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor(M):
    assert integer_determinant(M) == cofactor_det(M)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.lists(small_poly(n), min_size=n, max_size=n), st.lists(st.integers(-9, 9), min_size=n, max_size=n))))
def test_symbolic_determinant_evaluates_like_integer(args):
    polys, pt = args
    M = jacobian(polys)
    assert symbolic_determinant(M).evaluate(pt) == integer_determinant(M.evaluate(pt))


@CASES
@given(st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)), st.randoms())
def test_row_swap_negates(M, rng):
    n = len(M)
    if n < 2:
        return
    i, j = rng.sample(range(n), 2)
    swapped = [row[:] for row in M]
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert integer_determinant(swapped) == -integer_determinant(M)


def test_heights_and_exponents_every_family():
    for name in NAMES:
        cs = system(name)
        for k in range(2, min(cs.r, 5)):
            for t in (2, 3):
                vf, tf = build_family(cs, k, t)
                assert all(a.height == k + t - 1 for a in vf.vectors)
                if len(vf.vectors) >= cs.n:
                    chosen = vf.vectors[: cs.n]
                    assert exponent_general(chosen, cs.n) == k + t - 1
                    assert fiber_bound(chosen) == (k + t - 1) ** cs.n


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(1, 7))), st.permutations(list(range(1, 7))), st.permutations(list(range(1, 7))))
def test_composition_group_laws(a, b, c):
    g, h, k = Permutation(tuple(a)), Permutation(tuple(b)), Permutation(tuple(c))
    assert (g * h) * k == g * (h * k)
    assert (g * g.inverse()).is_identity() and (g.inverse() * g).is_identity()
    assert all((g * h)(x) == g(h(x)) for x in range(1, 7))


def test_random_jacobian_shapes():
    rng = random.Random(3)
    n = 3
    polys = [SparsePolynomial.from_terms(n, {(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)): 1})
             for _ in range(n)]
    M = jacobian(polys)
    assert isinstance(M, JacobianMatrix) and M.n == n
