import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from jacinterp import (DegenerateInputError, Family, JacobiParams, NodeSet, PointSystemSpec,
                       PreconditionError, barycentric_weights, eval_jacobi, generate_nodes, jacobi_roots)
from jacinterp.pointsystems import defining_residual, node_density_check

from conftest import make

FAMILIES = list(Family)


def test_chebyshev_first_two_points():
    assert np.allclose(make("ChebyshevFirst", 2).nodes, [-math.sqrt(0.5), math.sqrt(0.5)], atol=1e-15)


def test_gauss_legendre_two_points():
    x = make("GaussJacobi", 2).nodes
    assert np.allclose(x, [-1 / math.sqrt(3), 1 / math.sqrt(3)], atol=1e-15)


def test_lobatto_interior_convention():
    # total count n=4 -> interior roots of P_2^(a,b); (0,0) gives +-1/sqrt3,
    # the Legendre-Gauss-Lobatto set +-1/sqrt5 is the (1,1) member
    x00 = make("JacobiGaussLobatto", 4).nodes
    x11 = make("JacobiGaussLobatto", 4, 1, 1).nodes
    assert np.allclose(x00, [-1, -1 / math.sqrt(3), 1 / math.sqrt(3), 1], atol=1e-15)
    assert np.allclose(x11, [-1, -1 / math.sqrt(5), 1 / math.sqrt(5), 1], atol=1e-15)
    # brute-force root oracle of (1 - x^2) P_2(x)
    coeffs = np.polynomial.legendre.leg2poly([0, 0, 1])
    poly = np.polynomial.Polynomial([1, 0, -1]) * np.polynomial.Polynomial(coeffs)
    assert np.allclose(np.sort(poly.roots().real), x00, atol=1e-14)


def test_weights_examples():
    assert np.allclose(barycentric_weights([-1, 1]), [-1, 1])
    assert np.allclose(barycentric_weights([-1, 0, 1]), [0.5, -1, 0.5])
    w = make("ChebyshevSecond", 5).bary_weights
    assert np.allclose(np.abs(w), [0.5, 1, 1, 1, 0.5], atol=1e-14)
    assert np.all(np.sign(w[1:]) == -np.sign(w[:-1]))


def test_weights_duplicate_nodes():
    with pytest.raises(DegenerateInputError):
        barycentric_weights([0.1, 0.2, 0.1])


def test_weights_match_direct_product(rng):
    x = np.sort(rng.uniform(-1, 1, 12))
    direct = np.array([1 / np.prod([x[j] - x[k] for k in range(12) if k != j]) for j in range(12)])
    w = barycentric_weights(x)
    ratio = w / direct
    assert np.allclose(ratio, ratio[0], rtol=1e-12)
    assert np.max(np.abs(w)) == 1.0


def test_weights_no_overflow_large_n():
    w = make("ChebyshevFirst", 3000).bary_weights
    assert np.all(np.isfinite(w)) and np.all(w != 0)


def test_spec_validation():
    with pytest.raises(PreconditionError):
        PointSystemSpec("JacobiGaussLobatto", 1)
    with pytest.raises(PreconditionError):
        PointSystemSpec("nonsense", 5)
    assert PointSystemSpec("gauss", 3).family is Family.GAUSS_JACOBI
    assert PointSystemSpec("GaussJacobi", 1).n == 1


def test_roots_against_scipy(rng):
    for _ in range(25):
        n = int(rng.integers(1, 120))
        a, b = rng.uniform(-0.95, 3.0, 2)
        ref = np.sort(special.roots_jacobi(n, a, b)[0])
        assert np.allclose(jacobi_roots(n, (a, b)), ref, atol=1e-12)


def test_chebyshev_first_via_newton():
    n = 37
    newton = jacobi_roots(n, (-0.5, -0.5))
    assert np.allclose(newton, make("ChebyshevFirst", n).nodes, atol=1e-13)


def test_symmetric_gauss_nodes():
    x = make("GaussJacobi", 101, 0.7, 0.7).nodes
    assert np.max(np.abs(x + x[::-1])) < 1e-13


def test_endpoint_counts():
    for fam, count in [("JacobiGaussLobatto", 2), ("JacobiGaussRadauPlus1", 1),
                       ("JacobiGaussRadauMinus1", 1), ("GaussJacobi", 0)]:
        x = make(fam, 15, 0.3, 1.1).nodes
        assert np.sum(np.abs(x) == 1.0) == count
    assert make("JacobiGaussRadauPlus1", 9).nodes[-1] == 1.0
    assert make("JacobiGaussRadauMinus1", 9).nodes[0] == -1.0


def test_large_n_roots():
    x = make("GaussJacobi", 2000, 0.4, -0.6).nodes
    assert np.all(np.diff(x) > 0)
    assert np.max(defining_residual(make("GaussJacobi", 2000, 0.4, -0.6))) < 1e-10


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FAMILIES), st.integers(2, 150), st.floats(-0.95, 3.0), st.floats(-0.95, 3.0))
def test_generated_nodesets_are_valid(fam, n, a, b):
    ns = make(fam, n, a, b)
    x = ns.nodes
    assert x.size == n
    assert np.all(np.diff(x) > 0) and x[0] >= -1 and x[-1] <= 1
    assert np.max(defining_residual(ns)) < 1e-10


def test_density_check():
    assert node_density_check(make("ChebyshevFirst", 1000)) < 0.002
    assert node_density_check(make("Equispaced", 1000)) > 0.1
    assert node_density_check(make("GaussJacobi", 1000)) < 0.01
    with pytest.raises(PreconditionError):
        node_density_check(make("GaussJacobi", 9))


def test_nodeset_is_immutable():
    ns = make("ChebyshevSecond", 5)
    with pytest.raises(ValueError):
        ns.nodes[0] = 0.0
    assert len(ns) == 5 and ns.n == 5
    assert NodeSet.from_nodes([0.5, -0.5]).nodes.tolist() == [-0.5, 0.5]
