import itertools
import random

import pytest

from fencekit.errors import FencekitError, ResourceBoundError
from fencekit.invariant_oracle import (
    Derivation,
    SparsePolynomial,
    apply_derivation,
    component_dim,
    full_space_dim,
    layout_of,
    pprime_generators,
    weight_space,
)
from fencekit.lr import gl_dim
from fencekit.quiver import FenceQuiver, star_quiver
from fencekit.young import block_compatible, compositions_of, partitions

ARROW = FenceQuiver(("h",), ("t",), (("t", "h"),))


def _names(gens):
    return [str(g).split(": ")[1] for g in gens]


def test_generators():
    assert _names(pprime_generators("v", (1, 1))) == ["E12"]
    assert _names(pprime_generators("v", (2,))) == ["E12", "E21", "H1-H2"]
    assert _names(pprime_generators("v", (2, 1))) == ["E12", "E21", "E13", "E23", "H1-H2"]
    assert pprime_generators("v", (1,), "tail") == []
    with pytest.raises(FencekitError):
        pprime_generators("v", (1,), "middle")


def test_head_raising_operator_on_single_entry():
    layout = layout_of(ARROW, {"h": 2, "t": 1})  # variables x11, x21
    x21 = SparsePolynomial.variable(1, 2)
    out = apply_derivation(Derivation("h", "E", 1, 2, "head"), x21, layout)
    assert out == SparsePolynomial.variable(0, 2)


def test_tail_operator_acts_on_columns():
    layout = layout_of(ARROW, {"h": 1, "t": 2})  # variables x11, x12
    x12 = SparsePolynomial.variable(1, 2)
    out = apply_derivation(Derivation("t", "E", 1, 2, "tail"), x12, layout)
    assert out == SparsePolynomial.variable(0, 2)


def test_derivation_kills_constants():
    layout = layout_of(ARROW, {"h": 2, "t": 2})
    one = SparsePolynomial.constant(1, 4)
    for g in pprime_generators("h", (2,)) + pprime_generators("t", (2,), "tail"):
        assert apply_derivation(g, one, layout) == SparsePolynomial((), 4)


def test_derivation_side_must_match_vertex():
    layout = layout_of(ARROW, {"h": 2, "t": 2})
    with pytest.raises(FencekitError):
        apply_derivation(Derivation("t", "E", 1, 2, "head"), SparsePolynomial.variable(0, 4), layout)
    with pytest.raises(FencekitError):
        apply_derivation(Derivation("h", "E", 1, 3, "head"), SparsePolynomial.variable(0, 4), layout)


def _random_poly(rng, nvars, terms=3, degree=2):
    out = {}
    for _ in range(terms):
        mono = [0] * nvars
        for _ in range(rng.randrange(degree + 1)):
            mono[rng.randrange(nvars)] += 1
        out[tuple(mono)] = rng.randrange(-3, 4)
    return SparsePolynomial(out, nvars)


def test_leibniz_rule():
    rng = random.Random(7)
    q = star_quiver(2)
    d = {"h": 2, "t1": 2, "t2": 1}
    layout = layout_of(q, d)
    gens = pprime_generators("h", (2,)) + pprime_generators("t1", (2,), "tail")
    for _ in range(50):
        f, g = _random_poly(rng, layout.nvars), _random_poly(rng, layout.nvars)
        for der in gens:
            lhs = apply_derivation(der, f * g, layout)
            rhs = apply_derivation(der, f, layout) * g + f * apply_derivation(der, g, layout)
            assert lhs == rhs


def test_derivations_preserve_degree_and_shift_weight():
    layout = layout_of(ARROW, {"h": 2, "t": 2})
    rng = random.Random(2)
    for _ in range(20):
        mono = tuple(rng.randrange(3) for _ in range(4))
        f = SparsePolynomial({mono: 1}, 4)
        out = apply_derivation(Derivation("h", "E", 1, 2, "head"), f, layout)
        for m in out:
            assert sum(m) == sum(mono)
            # row 1 gains one, row 2 loses one (x11 x12 | x21 x22)
            assert m[0] + m[1] == mono[0] + mono[1] + 1


@pytest.mark.parametrize("N", range(4))
def test_single_entry(N):
    comps = {"h": (1,), "t": (1,)}
    assert component_dim(ARROW, {"h": 1, "t": 1}, comps, {"h": (N,), "t": (N,)}, N) == 1


def test_determinant():
    d = {"h": 2, "t": 2}
    assert component_dim(ARROW, d, {"h": (1, 1), "t": (1, 1)}, {"h": (1, 1), "t": (1, 1)}, 2) == 1


def test_star_monomial_xy():
    q = star_quiver(2)
    d = {"h": 1, "t1": 1, "t2": 1}
    comps = {"h": (1,), "t1": (1,), "t2": (1,)}
    assert component_dim(q, d, comps, {"h": (2,), "t1": (1,), "t2": (1,)}, 2) == 1


def test_standard_rep_has_borel_invariant_line():
    assert component_dim(ARROW, {"h": 2, "t": 1}, {"h": (1, 1), "t": None}, {"h": (1,)}, 1) == 1


def test_wrong_degree_is_zero():
    comps = {"h": (1,), "t": (1,)}
    assert component_dim(ARROW, {"h": 1, "t": 1}, comps, {"h": (2,), "t": (2,)}, 3) == 0


def test_duality_on_matrix_spaces():
    """Head unconstrained, parabolic tail: the F component is ``dim rho_n^F``
    when F is block-compatible and 0 otherwise."""
    for n in range(1, 4):
        for k in range(1, 4):
            for comp in compositions_of(k):
                for size in range(5):
                    for F in partitions(size, max_length=min(n, k)):
                        expected = gl_dim(F, n) if block_compatible(F, comp) else 0
                        got = component_dim(ARROW, {"h": n, "t": k}, {"h": None, "t": comp}, {"t": F}, size)
                        assert got == expected, (n, k, comp, F)


def test_free_case_exhausts_the_polynomial_space():
    d = {"h": 2, "t": 2}
    for degree in range(4):
        labels = list(partitions(degree, max_length=2))
        assert component_dim(ARROW, d, {"h": None, "t": None}, {}, degree) == full_space_dim(4, degree)
        constrained = sum(component_dim(ARROW, d, {"h": (2,), "t": (2,)}, {"h": F, "t": F}, degree) for F in labels)
        if degree:
            assert constrained < full_space_dim(4, degree)
        # with Borel groups the components are the highest weight lines, one per F
        borel = sum(component_dim(ARROW, d, {"h": (1, 1), "t": (1, 1)}, {"h": F, "t": G}, degree)
                    for F, G in itertools.product(labels, repeat=2))
        assert borel == len(labels)


def test_weight_space_and_bound():
    layout = layout_of(ARROW, {"h": 2, "t": 2})
    space = weight_space(layout, {"h": (1, 1), "t": None}, {"h": (2, 1)}, 3)
    # row degrees (2, 1) spread over two columns
    assert len(space) == 3 * 2
    with pytest.raises(ResourceBoundError):
        component_dim(ARROW, {"h": 2, "t": 2}, {"h": None, "t": None}, {}, 6, limit=10)


def test_env_ceiling(monkeypatch):
    monkeypatch.setenv("FENCEKIT_MAX_MONOMIALS", "5")
    with pytest.raises(ResourceBoundError):
        component_dim(ARROW, {"h": 2, "t": 2}, {"h": None, "t": None}, {}, 3)
    monkeypatch.setenv("FENCEKIT_MAX_MONOMIALS", "zero")
    with pytest.raises(FencekitError):
        component_dim(ARROW, {"h": 2, "t": 2}, {"h": None, "t": None}, {}, 3)
