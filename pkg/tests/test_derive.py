"""Derivation engine: mapping tables, constraints, merging, robustness."""

import random

import pytest

from hvlab.cyclotomic import CycInt
from hvlab.derive import (
    ConflictingConstraints,
    Constraint,
    NonMonomialComponent,
    PartialComponent,
    TotalComponent,
    UndeterminedComponent,
    component_vars,
    derivation_report,
    derive,
    enumerate_mappings,
    extract_constraints,
    merge,
    render_derivation_text,
)
from hvlab.qstate import GATES, matrix_digest
from hvlab.triplets import SignMonomial, SymTriplet, all_triplets, cnot, h, p_half_pi

# Expected gate action on basis products, frozen from the exact oracle.
H_TABLE = {
    "X+": "Z+", "X-": "Z-", "Y+": "Y-", "Y-": "Y+", "Z+": "X+", "Z-": "X-",
}
S_TABLE = {
    "X+": "Y+", "X-": "Y-", "Y+": "X-", "Y-": "X+", "Z+": "Z+", "Z-": "Z-",
}
CNOT_TABLE = {
    ("X+", "X+"): ("X+", "X+"),
    ("X+", "X-"): ("X-", "X-"),
    ("X-", "X+"): ("X-", "X+"),
    ("X-", "X-"): ("X+", "X-"),
    ("Y+", "X+"): ("Y+", "X+"),
    ("Y+", "X-"): ("Y-", "X-"),
    ("Y-", "X+"): ("Y-", "X+"),
    ("Y-", "X-"): ("Y+", "X-"),
    ("Z+", "X+"): ("Z+", "X+"),
    ("Z+", "X-"): ("Z+", "X-"),
    ("Z+", "Y+"): ("Z+", "Y+"),
    ("Z+", "Y-"): ("Z+", "Y-"),
    ("Z+", "Z+"): ("Z+", "Z+"),
    ("Z+", "Z-"): ("Z+", "Z-"),
    ("Z-", "X+"): ("Z-", "X+"),
    ("Z-", "X-"): ("Z-", "X-"),
    ("Z-", "Y+"): ("Z-", "Y-"),
    ("Z-", "Y-"): ("Z-", "Y+"),
    ("Z-", "Z+"): ("Z-", "Z-"),
    ("Z-", "Z-"): ("Z-", "Z+"),
}
CNOT_ESCAPES = {
    (a, b) for a in ("X+", "X-", "Y+", "Y-") for b in ("Y+", "Y-", "Z+", "Z-")
}


def table_as_strings(table):
    preserved = {
        tuple(str(l) for l in i): tuple(str(l) for l in o) for i, o in table.preserved
    }
    escaped = {tuple(str(l) for l in labels) for labels in table.escaped}
    return preserved, escaped


def test_component_vars_order():
    assert component_vars(1) == ((1, "x"), (1, "y"), (1, "z"))
    assert component_vars(2) == (
        (1, "x"), (1, "y"), (1, "z"), (2, "x"), (2, "y"), (2, "z"),
    )
    with pytest.raises(ValueError):
        component_vars(3)


def test_single_qubit_mapping_tables():
    for gate_name, expected in (("H", H_TABLE), ("S", S_TABLE)):
        table = enumerate_mappings(GATES[gate_name])
        preserved, escaped = table_as_strings(table)
        assert preserved == {(k,): (v,) for k, v in expected.items()}
        assert escaped == set()


def test_cnot_mapping_table():
    table = enumerate_mappings(GATES["CNOT"])
    preserved, escaped = table_as_strings(table)
    assert preserved == CNOT_TABLE
    assert escaped == CNOT_ESCAPES
    assert len(preserved) == 20 and len(escaped) == 16
    assert ("Y+", "Y+") in escaped


def test_t_mapping_table():
    table = enumerate_mappings(GATES["T"])
    preserved, escaped = table_as_strings(table)
    assert preserved == {("Z+",): ("Z+",), ("Z-",): ("Z-",)}
    assert escaped == {("X+",), ("X-",), ("Y+",), ("Y-",)}


def test_constraint_counts_and_rendering():
    assert len(extract_constraints(enumerate_mappings(GATES["H"]))) == 6
    constraints = extract_constraints(enumerate_mappings(GATES["CNOT"]))
    assert len(constraints) == 40
    c = Constraint(frozenset([((1, "x"), 1), ((2, "x"), -1)]), ((1, "x"), -1))
    assert c.render() == "x1=+1 & x2=-1 -> x1'=-1"


def test_derive_h():
    rep = derive(GATES["H"])
    assert rep.all_total
    (sym,) = rep.sym_triplets()
    assert sym == h(SymTriplet.generic(1))
    assert str(sym) == "⟨z1, -y1, x1⟩"


def test_derive_s():
    rep = derive(GATES["S"])
    assert rep.all_total
    (sym,) = rep.sym_triplets()
    assert sym == p_half_pi(SymTriplet.generic(1))
    variant = SymTriplet(
        SignMonomial.variable((1, "y")),
        -SignMonomial.variable((1, "x")),
        SignMonomial.variable((1, "z")),
    )
    assert sym != variant


def test_derive_cnot():
    rep = derive(GATES["CNOT"])
    assert rep.all_total
    assert rep.sym_triplets() == cnot(SymTriplet.generic(1), SymTriplet.generic(2))


def test_derive_pauli_and_identity():
    frozen = {
        "I": "⟨x1, y1, z1⟩",
        "X": "⟨x1, -y1, -z1⟩",
        "Y": "⟨-x1, y1, -z1⟩",
        "Z": "⟨-x1, -y1, z1⟩",
    }
    for name, expected in frozen.items():
        rep = derive(GATES[name])
        assert rep.all_total
        (sym,) = rep.sym_triplets()
        assert str(sym) == expected


def test_derive_t_is_partial():
    rep = derive(GATES["T"])
    assert not rep.all_total
    assert isinstance(rep.component((1, "x")), UndeterminedComponent)
    assert isinstance(rep.component((1, "y")), UndeterminedComponent)
    z = rep.component((1, "z"))
    assert isinstance(z, TotalComponent)
    assert z.monomial == SignMonomial.variable((1, "z"))
    with pytest.raises(ValueError):
        rep.sym_triplets()


def test_derived_rule_equals_builtin_on_all_inputs():
    h_rep = derive(GATES["H"])
    s_rep = derive(GATES["S"])
    cnot_rep = derive(GATES["CNOT"])
    for t in all_triplets():
        assert h_rep.evaluate(t) == (h(t),)
        assert s_rep.evaluate(t) == (p_half_pi(t),)
    for a in all_triplets():
        for b in all_triplets():
            assert cnot_rep.evaluate(a, b) == cnot(a, b)


def test_merge_is_order_independent():
    constraints = list(extract_constraints(enumerate_mappings(GATES["CNOT"])))
    baseline = merge(tuple(constraints), 2)
    rng = random.Random(7)
    for _ in range(5):
        rng.shuffle(constraints)
        assert merge(tuple(constraints), 2) == baseline


def test_merge_detects_conflicts():
    clash = (
        Constraint(frozenset([((1, "x"), 1)]), ((1, "z"), 1)),
        Constraint(frozenset(), ((1, "z"), -1)),
    )
    with pytest.raises(ConflictingConstraints):
        merge(clash, 1)


def test_merge_reports_partial_components():
    rep = merge((Constraint(frozenset([((1, "x"), 1)]), ((1, "y"), 1)),), 1)
    y = rep.component((1, "y"))
    assert isinstance(y, PartialComponent)
    assert len(y.forced) == 4
    assert all(sign == 1 for _, sign in y.forced)
    assert isinstance(rep.component((1, "x")), UndeterminedComponent)


def test_merge_flags_non_monomial_truth_tables():
    # force x1' = (x1 AND y1) in sign form: +1 only when both are +1
    constraints = tuple(
        Constraint(
            frozenset([((1, "x"), sx), ((1, "y"), sy)]),
            ((1, "x"), 1 if sx == 1 and sy == 1 else -1),
        )
        for sx in (-1, 1)
        for sy in (-1, 1)
    )
    rep = merge(constraints, 1)
    x = rep.component((1, "x"))
    assert isinstance(x, NonMonomialComponent)
    assert x.values.count(1) == 2  # z1 free doubles the single true row


def test_derive_is_scale_invariant():
    rng = random.Random(20260818)

    def random_scalar():
        while True:
            u = CycInt(*(rng.randint(-2, 2) for _ in range(4)))
            if not u.is_zero():
                return u

    for name in ("H", "S", "CNOT", "T"):
        g = GATES[name]
        baseline = derive(g)
        for _ in range(8):
            assert derive(g.scaled(random_scalar())) == baseline


def test_derivation_report_content():
    report = derivation_report(GATES["H"])
    assert report["gate"] == "H"
    assert report["matrix_sha256"] == matrix_digest(GATES["H"])
    assert report["preserved_count"] == 6 and report["escaped_count"] == 0
    assert report["all_total"] is True
    assert report["representation"] == "h: ⟨x,y,z⟩ ↦ ⟨z, -y, x⟩"
    assert report["input_variables"] == ["x1", "y1", "z1"]
    text = render_derivation_text(report)
    assert "h: ⟨x,y,z⟩ ↦ ⟨z, -y, x⟩" in text
    assert "X+ ↦ Z+" in text


def test_derivation_report_cnot_and_t():
    report = derivation_report(GATES["CNOT"])
    assert report["representation"] == (
        "cnot: (⟨x1,y1,z1⟩, ⟨x2,y2,z2⟩) ↦ (⟨x1.x2, y1.x2, z1⟩, ⟨x2, z1.y2, z1.z2⟩)"
    )
    assert len(report["constraints"]) == 40
    report = derivation_report(GATES["T"])
    assert report["all_total"] is False
    assert "representation" not in report
    kinds = {c["var"]: c["kind"] for c in report["components"]}
    assert kinds == {"x1": "undetermined", "y1": "undetermined", "z1": "total"}
