import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from womlat.algebra import BinaryOpTable, UnaryAlgebra, is_dually_weakly_orthomodular
from womlat.errors import CapExceeded, LatticeError, PreconditionViolated
from womlat.fixtures import chain, fixture, m3
from womlat.implication import (
    CompatibleFamily,
    complement_from_d_implication,
    complement_from_w_implication,
    d_implication_from_complement,
    d_implication_from_family,
    d_implication_properties,
    enumerate_compatible_families,
    family_from_d_implication,
    is_compatible_family,
    is_d_implication,
    is_w_implication,
    sasaki_implication,
    verify_d_bijection,
    verify_family_bijection,
    verify_sasaki_theorem,
    verify_w_bijection,
    w_implication_from_complement,
    w_implication_properties,
)
from womlat.search import all_lattices, iter_unary


def to_dict(table):
    n = len(table.op)
    return {(x, y): table.op[x][y] for x in range(n) for y in range(n)}


def naive(lat):
    return oracle.NaiveLattice(list(range(len(lat))), lambda a, b: lat.leq_table[a][b])


def test_d_implication_on_fig2(fig2):
    arrow = d_implication_from_complement(fig2)
    assert is_d_implication(fig2.lattice, arrow)
    assert complement_from_d_implication(fig2.lattice, arrow) == fig2
    i = fig2.lattice.index
    # (a \/ b)' \/ b = e' \/ b = d \/ b = g
    assert arrow(i("a"), i("b")) == i("g")


def c2_table(f):
    lat = chain(2)
    return lat, BinaryOpTable.from_function(lat, f, "implication")


def test_c2_arrows():
    lat, second = c2_table(lambda x, y: y)
    assert is_d_implication(lat, second)
    assert complement_from_d_implication(lat, second).comp == (0, 0)
    lat, classical = c2_table(lambda x, y: 1 if x == 0 else y)
    assert is_d_implication(lat, classical)
    assert complement_from_d_implication(lat, classical).comp == (1, 0)
    w = is_w_implication(lat, second)
    assert not w.holds and w.witness == {"x": "1"}


def test_c2_projection_is_not_a_d_implication():
    lat, first = c2_table(lambda x, y: x)
    r = is_d_implication(lat, first)
    assert not r.holds
    # (x\/y)/\(x->y) = y also fails at (1, 0), but (0, 1) comes first in lex order
    assert r.part("(x\\/y)/\\(x->y) = y").witness == {"x": "0", "y": "1"}
    # the combined report names the first failing identity: 1->1 = 1 but 0->1 = 0
    assert r.witness == {"x": "1", "y": "0"}
    assert r.detail == "(x\\/y)->x = y->x: 1 != 0"


def test_c2_families():
    lat, classical = c2_table(lambda x, y: 1 if x == 0 else y)
    fam = family_from_d_implication(lat, classical)
    assert fam.ops == ((1, 0), (None, 1))
    assert d_implication_from_family(lat, fam) == classical
    lat, second = c2_table(lambda x, y: y)
    fam = family_from_d_implication(lat, second)
    assert fam.ops == ((0, 0), (None, 1))
    assert d_implication_from_family(lat, fam) == second
    identity = CompatibleFamily(lat, ((0, 1), (None, 1)))
    r = is_compatible_family(lat, identity)
    assert not r.holds
    assert r.witness == {"filter": "0", "x": "0", "y": "1"}


def test_table_values(m3b, fig2):
    i, N = m3b.lattice.index, m3b.lattice.names
    d = d_implication_from_complement(m3b)
    assert N[d(i("a"), i("0"))] == "b"
    assert N[d(i("1"), i("a"))] == "a"
    assert N[d(i("a"), i("b"))] == "b"
    assert d(m3b.lattice.bottom, m3b.lattice.bottom) == m3b.comp[m3b.lattice.bottom]
    i, N = fig2.lattice.index, fig2.lattice.names
    w = w_implication_from_complement(fig2)
    assert N[w(i("a"), i("b"))] == "g"
    assert N[w(i("e"), i("a"))] == "f"
    assert all(w(x, fig2.lattice.bottom) == fig2.comp[x] for x in range(10))
    sas = sasaki_implication(fig2)
    assert sas(i("a"), i("b")) == fig2.lattice.join(fig2.lattice.meet(i("g"), i("h")), i("b"))


def test_preconditions(m3_lattice):
    bad = UnaryAlgebra(m3_lattice, tuple(range(5)))
    assert not is_dually_weakly_orthomodular(bad)
    with pytest.raises(PreconditionViolated) as err:
        d_implication_from_complement(bad)
    assert err.value.report.witness is not None
    with pytest.raises(PreconditionViolated):
        w_implication_from_complement(fixture("M3B"))
    with pytest.raises(PreconditionViolated):
        verify_sasaki_theorem(fixture("M3B"))


@pytest.mark.parametrize("n,d_count,w_count", [(2, 2, 1), (3, 3, 0)])
def test_every_arrow_on_small_chains(n, d_count, w_count):
    """All n^(n*n) binary tables on a chain; oracle counts D/W-implications independently."""
    lat = chain(n)
    nl = naive(lat)
    d_found, w_found = [], []
    for arrow in oracle.all_arrows(nl):
        table = BinaryOpTable(lat, tuple(tuple(arrow[x, y] for y in range(n)) for x in range(n)),
                              "implication")
        d = is_d_implication(lat, table).holds
        assert d == oracle.is_d_implication(nl, arrow)
        w = is_w_implication(lat, table).holds
        assert w == oracle.is_w_implication(nl, arrow)
        if d:
            d_found.append(table)
        if w:
            w_found.append(table)
    assert len(d_found) == d_count and len(w_found) == w_count
    # every D-implication comes from its own x -> 0
    for table in d_found:
        back = complement_from_d_implication(lat, table)
        assert d_implication_from_complement(back) == table
    for table in w_found:
        back = complement_from_w_implication(lat, table)
        assert w_implication_from_complement(back) == table


@pytest.mark.parametrize("lat", all_lattices(5), ids=lambda lat: f"n{len(lat)}-{lat.covers()}")
def test_bijection_reports(lat):
    d = verify_d_bijection(lat)
    assert d.holds, d.detail
    assert d.info["dwom_tables"] == d.info["d_implications"]
    w = verify_w_bijection(lat)
    assert w.holds, w.detail


def test_d_bijection_counts():
    assert verify_d_bijection(m3()).info["dwom_tables"] == 135
    assert verify_d_bijection(chain(4)).info["dwom_tables"] == 4


# Numbers of compatible families, from the oracle's direct search (oracle.compatible_family_count).
FAMILY_COUNTS = {"C1": 1, "C2": 2, "C3": 3, "C4": 4, "B4": 16}


@pytest.mark.parametrize("name", sorted(FAMILY_COUNTS))
def test_family_counts(name):
    lat = fixture("B4").lattice if name == "B4" else chain(int(name[1]))
    report = verify_family_bijection(lat)
    assert report.holds, report.detail
    assert report.info["families"] == FAMILY_COUNTS[name]
    assert report.info["dwom_arrows"] == FAMILY_COUNTS[name]


def test_family_oracle_b4():
    assert oracle.compatible_family_count(oracle.b4()) == 16


def test_family_cap():
    with pytest.raises(CapExceeded):
        enumerate_compatible_families(m3())


def test_family_round_trip_fig2(fig2):
    lat = fig2.lattice
    arrow = d_implication_from_complement(fig2)
    fam = family_from_d_implication(lat, arrow)
    assert is_compatible_family(lat, fam)
    assert d_implication_from_family(lat, fam) == arrow
    # the operation on [0) is the original unary table
    assert fam.local_algebra(lat.bottom).comp == fig2.comp


def test_incompatible_family_rejected():
    lat = chain(3)
    good = enumerate_compatible_families(lat)[0].ops
    with pytest.raises(LatticeError):
        CompatibleFamily(lat, (good[0], good[0], good[2]))
    # identity on [0) is not dWOM
    broken = ((0, 1, 2),) + good[1:]
    r = is_compatible_family(lat, CompatibleFamily(lat, broken))
    assert not r.holds and r.witness["filter"] == "0"


def test_sasaki_on_m3_involutions():
    reports = [verify_sasaki_theorem(a) for a in iter_unary(m3(), {"dnl": True})]
    assert len(reports) == 26
    assert all(r.holds for r in reports)
    assert all(not r.info["wom"] for r in reports)


def test_sasaki_on_fig2_and_boolean(fig2, b4):
    for a in (fig2, b4):
        r = verify_sasaki_theorem(a)
        assert r.holds and r.info["wom"] and r.info["sasaki_identity"]


def test_boolean_implications_agree(b4):
    lat = b4.lattice
    classical = BinaryOpTable.from_function(lat, lambda x, y: lat.join(b4.comp[x], y), "implication")
    assert d_implication_from_complement(b4) == classical
    assert w_implication_from_complement(b4) == classical
    assert sasaki_implication(b4) == classical


def test_elementary_properties(fig2, m3a):
    for a in (fig2, m3a):
        assert d_implication_properties(a), d_implication_properties(a).detail
        assert w_implication_properties(a), w_implication_properties(a).detail


DWOM_SMALL = [a for lat in all_lattices(5) for a in iter_unary(lat, {"dwom": True})]
WOM_SMALL = [a for lat in all_lattices(5) for a in iter_unary(lat, {"wom": True})]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DWOM_SMALL))
def test_d_arrow_matches_oracle(a):
    nl = naive(a.lattice)
    assert oracle.is_d_implication(nl, to_dict(d_implication_from_complement(a)))
    assert d_implication_properties(a).holds


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(WOM_SMALL))
def test_w_properties_on_wom(a):
    assert w_implication_properties(a).holds
