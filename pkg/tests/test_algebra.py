import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from conftest import alg
from womlat.algebra import (
    PREDICATES,
    BinaryOpTable,
    CheckReport,
    UnaryAlgebra,
    check_lemma_bounds,
    combine,
    failed,
    is_antitone,
    is_complementation,
    is_dually_weakly_orthomodular,
    is_orthocomplementation,
    is_orthomodular,
    is_weakly_orthomodular,
    passed,
    satisfies_de_morgan,
    satisfies_double_negation,
    satisfies_weak_double_negation,
)
from womlat.errors import LatticeError, UnknownLabel
from womlat.fixtures import chain, m3
from womlat.search import all_lattices, enumerate_unary, iter_unary
from womlat.terms import evaluate, holds


def naive(lat):
    """The same lattice, rebuilt in the independent oracle."""
    return oracle.NaiveLattice(list(range(len(lat))), lambda a, b: lat.leq_table[a][b])


def test_report_invariant():
    with pytest.raises(ValueError):
        CheckReport("x", True, {"x": "a"})
    with pytest.raises(ValueError):
        CheckReport("x", False, None)
    assert not failed("p", {"x": "a"})
    assert passed("p")


def test_combine_takes_first_failure():
    r = combine("all", [passed("p"), failed("q", {"x": "a"}, "first"), failed("r", {"x": "b"}, "second")])
    assert not r.holds
    assert r.witness == {"x": "a"}
    assert r.detail == "q: first"
    assert r.part("r").witness == {"x": "b"}
    d = r.to_dict()
    assert [p["name"] for p in d["parts"]] == ["p", "q", "r"]


def test_unknown_label_in_table(m3_lattice):
    with pytest.raises(UnknownLabel):
        alg(m3_lattice, {"0": "1", "a": "zz", "b": "c", "c": "a", "1": "0"})
    with pytest.raises(LatticeError, match="not total"):
        alg(m3_lattice, {"0": "1", "a": "b"})


def test_fig2_classification(fig2):
    assert is_weakly_orthomodular(fig2)
    assert is_dually_weakly_orthomodular(fig2)
    assert satisfies_double_negation(fig2)
    assert is_complementation(fig2)
    om = is_orthomodular(fig2)
    assert not om.holds
    assert om.witness == {"x": "a", "y": "f"}
    assert "f'=c ⋢ g=a'" in om.detail
    assert not is_antitone(fig2).holds


def test_m3_tables(m3a, m3b):
    assert is_weakly_orthomodular(m3b) and is_dually_weakly_orthomodular(m3b)
    assert satisfies_weak_double_negation(m3b)
    dnl = satisfies_double_negation(m3b)
    assert dnl.witness == {"x": "a"}
    assert dnl.detail == "(x')' = b' = c != a"
    assert is_weakly_orthomodular(m3a) and is_dually_weakly_orthomodular(m3a)
    assert not satisfies_double_negation(m3a)
    assert not satisfies_weak_double_negation(m3a)


def test_boolean_is_orthomodular(b4):
    assert is_orthomodular(b4)
    assert satisfies_de_morgan(b4)
    assert is_orthocomplementation(b4)


def test_lemma_bounds_report(fig2):
    r = check_lemma_bounds(fig2)
    assert r.holds and r.info == {"wom": True, "dwom": True}


# Counts of unary tables per property, computed with the brute-force oracle in oracle.py.
ORACLE_COUNTS = {
    ("C2", "dwom"): 2, ("C3", "dwom"): 3, ("C4", "dwom"): 4, ("M3", "dwom"): 135,
    ("C2", "wom"): 2, ("C3", "wom"): 3, ("C4", "wom"): 4, ("M3", "wom"): 135,
    ("C2", "wom+dwom"): 1, ("C3", "wom+dwom"): 0, ("C4", "wom+dwom"): 0, ("M3", "wom+dwom"): 8,
    ("C2", "wom+dnl"): 1, ("M3", "wom+dnl"): 0,
    ("C2", "dnl"): 2, ("C3", "dnl"): 4, ("C4", "dnl"): 10, ("M3", "dnl"): 26,
}


def _lattice(name):
    return m3() if name == "M3" else chain(int(name[1]))


@pytest.mark.parametrize("key", sorted(ORACLE_COUNTS))
def test_counts_match_oracle(key):
    name, props = key
    want = {p: True for p in props.split("+")}
    assert len(enumerate_unary(_lattice(name), want)) == ORACLE_COUNTS[key]


def test_oracle_agrees_on_all_small_algebras():
    """Every unary table on every lattice of size <= 4, plus M3, checked by both sides."""
    for lat in all_lattices(4) + [m3()]:
        nl = naive(lat)
        for a in iter_unary(lat):
            f = dict(enumerate(a.comp))
            assert is_weakly_orthomodular(a).holds == oracle.is_wom(nl, f)
            assert is_dually_weakly_orthomodular(a).holds == oracle.is_dwom(nl, f)
            assert satisfies_double_negation(a).holds == oracle.is_dnl(nl, f)


IDENTITIES = {
    "wom": "(x/\\y)\\/(x/\\(x/\\y)') = x",
    "dwom": "(x\\/y)/\\(x\\/(x\\/y)') = x",
    "dnl": "x'' = x",
    "wdnl": "x''' = x'",
}

SMALL = [a for lat in all_lattices(4) + [m3()] for a in iter_unary(lat)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(sorted(IDENTITIES)))
def test_predicates_agree_with_term_checker(a, prop):
    direct = PREDICATES[prop](a)
    via_terms = holds(IDENTITIES[prop], a)
    assert direct.holds == via_terms.holds
    if not direct.holds:
        # the lex-first witness of both checks is the same assignment
        assert direct.witness == via_terms.witness


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL))
def test_witnesses_really_violate(a):
    for name in ("wom", "dwom", "dnl", "wdnl"):
        r = PREDICATES[name](a)
        if not r.holds:
            lhs, rhs = IDENTITIES[name].split(" = ")
            assert evaluate(lhs, a, r.witness) != evaluate(rhs, a, r.witness)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL))
def test_wom_and_dwom_force_complement_laws(a):
    lat = a.lattice
    if is_weakly_orthomodular(a):
        assert all(lat.join(x, a.comp[x]) == lat.top for x in range(len(lat)))
    if is_dually_weakly_orthomodular(a):
        assert all(lat.meet(x, a.comp[x]) == lat.bottom for x in range(len(lat)))


def test_value_semantics(m3a):
    same = UnaryAlgebra(m3a.lattice, tuple(m3a.comp))
    assert same == m3a and hash(same) == hash(m3a)
    t = BinaryOpTable.from_function(m3a.lattice, lambda x, y: x, "implication")
    assert t(1, 2) == 1
