import itertools
import xml.etree.ElementTree as ET

import pytest

from nufact.divcalc import (
    CapExceeded,
    CycleStructure,
    Divisor,
    LiftedPoint,
    apply_lifted,
    compose,
    compose_word,
    default_max_len,
    enumerate_factorizations,
    enumerate_factorizations_ex,
    is_realizable,
    render_svg,
    tau,
)

CS3 = CycleStructure.from_text("Q1>Q2>Q3")
MIXED = CycleStructure.from_text("Q1>Q2>Q3;P")


def div(text, cs=CS3):
    return cs.parse_divisor(text)


def all_divisors(cs, max_count):
    labels = cs.labels()
    for combo in itertools.product(range(max_count + 1), repeat=len(labels)):
        yield Divisor(dict(zip(labels, combo)))


def test_tau_examples():
    assert tau(CS3, "Q1") == "Q2"
    assert tau(MIXED, "P") == "P"
    assert tau(CS3, tau(CS3, tau(CS3, "Q1"))) == "Q1"
    with pytest.raises(ValueError):
        tau(CS3, "R")


def test_cycle_structure_rejects_duplicates():
    with pytest.raises(ValueError):
        CycleStructure([["Q1", "Q2"], ["Q1"]])
    with pytest.raises(ValueError):
        CycleStructure.from_text("Q1>>Q2")


def test_apply_lifted_worked_values():
    D = div("2Q1+Q3")
    for n in (-2, 0, 5):
        assert apply_lifted(CS3, D, LiftedPoint("Q1", n)) == LiftedPoint("Q3", n)
        assert apply_lifted(CS3, D, LiftedPoint("Q2", n)) == LiftedPoint("Q2", n)
        assert apply_lifted(CS3, D, LiftedPoint("Q3", n)) == LiftedPoint("Q1", n + 1)


def test_apply_lifted_winding_example():
    D = div("4Q1")
    assert apply_lifted(CS3, D, LiftedPoint("Q1", 0)) == LiftedPoint("Q2", 1)


def test_apply_lifted_zero_divisor_is_identity():
    for label in CS3.labels():
        p = LiftedPoint(label, 3)
        assert apply_lifted(CS3, CS3.zero(), p) == p


def test_apply_lifted_level_equivariance():
    for D in all_divisors(CS3, 2):
        for label in CS3.labels():
            base = apply_lifted(CS3, D, LiftedPoint(label, 0))
            shifted = apply_lifted(CS3, D, LiftedPoint(label, 7))
            assert shifted == LiftedPoint(base.label, base.level + 7)


def test_compose_worked_values():
    Q1, Q2, Q3 = (CS3.indicator(p) for p in ("Q1", "Q2", "Q3"))
    assert compose(CS3, Q1, Q2) == div("2Q1+Q2")
    assert compose(CS3, Q2, Q1) == div("Q1+Q2")
    assert compose_word(CS3, ["Q1", "Q2", "Q3"]) == div("3Q1+2Q2+Q3")
    assert compose_word(CS3, ["Q1", "Q2", "Q1"]) == compose(CS3, Q1, Q2)
    D = div("2Q1+Q3")
    assert compose(CS3, D, CS3.zero()) == D
    assert compose(CS3, CS3.zero(), D) == D


def test_compose_matches_lifted_maps():
    for D in all_divisors(CS3, 2):
        for E in all_divisors(CS3, 2):
            C = compose(CS3, D, E)
            for label in CS3.labels():
                for level in range(-3, 4):
                    p = LiftedPoint(label, level)
                    assert apply_lifted(CS3, C, p) == \
                        apply_lifted(CS3, E, apply_lifted(CS3, D, p))


def test_compose_associative_exhaustively():
    for text in ("A", "A>B", "Q1>Q2>Q3"):
        cs = CycleStructure.from_text(text)
        divisors = list(all_divisors(cs, 2))
        for D, E in itertools.product(divisors, repeat=2):
            DE = compose(cs, D, E)
            for F in divisors:
                assert compose(cs, DE, F) == compose(cs, D, compose(cs, E, F))


def test_indicators_idempotent_on_real_cycles():
    # idempotence needs a cycle of length >= 2; a 1-cycle label behaves like
    # a classical invertible prime, P o P = 2P
    for cs in (CS3, MIXED, CycleStructure.from_text("A>B")):
        for label in cs.labels():
            P = cs.indicator(label)
            if len(cs.cycle_of(label)) >= 2:
                assert compose(cs, P, P) == P
            else:
                assert compose(cs, P, P) == Divisor({label: 2})


def test_compose_with_full_cycle():
    full = CS3.full_cycle_divisor(0)
    for D in all_divisors(CS3, 2):
        left = compose(CS3, D, full)
        right = compose(CS3, full, D)
        for p in CS3.labels():
            assert left.get(p) == D.get(p) + 1
            assert right.get(p) == 1 + D.get(tau(CS3, p))


def test_realizability_examples():
    assert is_realizable(CS3, div("7Q1+6Q2+8Q3"))
    assert not is_realizable(CS3, div("2Q1"))
    assert is_realizable(CS3, CS3.zero())
    assert is_realizable(CS3, CS3.full_cycle_divisor(0))


def test_realizability_closed_under_composition():
    realizable = [D for D in all_divisors(CS3, 2) if is_realizable(CS3, D)]
    for D in realizable:
        for E in realizable:
            assert is_realizable(CS3, compose(CS3, D, E))


def test_realizable_iff_lifted_map_monotone():
    # the diagrammatic reading: strands never cross exactly for divisors
    # that come from ideals
    def window(cs):
        pts = [LiftedPoint(p, n) for n in range(-2, 3) for p in cs.labels()]
        return pts  # listed in the total order (level, then position)

    def monotone(cs, D):
        pts = window(cs)
        images = [apply_lifted(cs, D, p) for p in pts]
        keys = [(q.level, cs.position(q.label)[1]) for q in images]
        return all(a <= b for a, b in zip(keys, keys[1:]))

    for D in all_divisors(CS3, 3):
        assert is_realizable(CS3, D) == monotone(CS3, D)


def test_full_cycle_divisor():
    assert CS3.full_cycle_divisor(0) == div("Q1+Q2+Q3")
    single = CycleStructure.from_text("P")
    assert single.full_cycle_divisor(0) == single.parse_divisor("P")
    with pytest.raises(ValueError):
        CS3.full_cycle_divisor(1)


def test_enumerate_factorizations_fig2():
    words = enumerate_factorizations(CS3, div("3Q1+2Q2+Q3"), 5)
    assert ["Q1", "Q2", "Q3"] in words
    assert ["Q2", "Q1", "Q3", "Q2", "Q3"] in words
    for w in words:
        assert compose_word(CS3, w) == div("3Q1+2Q2+Q3")
    assert len({tuple(w) for w in words}) == len(words)


def test_enumerate_factorizations_idempotent_letter():
    words = enumerate_factorizations(CS3, div("Q1"), 3)
    assert ["Q1"] in words and ["Q1", "Q1"] in words


def test_enumerate_factorizations_zero_divisor():
    assert enumerate_factorizations(CS3, CS3.zero(), 4) == [[]]


def test_enumerate_factorizations_rejects_unrealizable():
    with pytest.raises(ValueError):
        enumerate_factorizations(CS3, div("2Q1"), 6)


def test_enumerate_factorizations_truncation_flag():
    _, truncated = enumerate_factorizations_ex(CS3, div("3Q1+2Q2+Q3"), 2)
    assert truncated
    words, _ = enumerate_factorizations_ex(CS3, div("Q1+Q2+Q3"), 1)
    assert words == []


def test_enumerate_factorizations_word_cap():
    # word counts explode with the budget once idempotents can repeat
    with pytest.raises(CapExceeded):
        enumerate_factorizations(CS3, div("3Q1+2Q2+Q3"), 9, cap=1000)
    assert len(enumerate_factorizations(CS3, div("3Q1+2Q2+Q3"), 9, cap=5000)) == 2754


def test_default_max_len():
    assert default_max_len(CS3, div("3Q1+2Q2+Q3")) == 9
    assert default_max_len(MIXED, MIXED.parse_divisor("P")) == 2


def test_multi_cycle_independence():
    # composing divisors supported on different cycles just adds them
    D = MIXED.parse_divisor("2Q1+Q3")
    E = MIXED.parse_divisor("P")
    assert compose(MIXED, D, E) == MIXED.parse_divisor("2Q1+Q3+P")
    assert compose(MIXED, E, D) == MIXED.parse_divisor("2Q1+Q3+P")


def test_multi_cycle_factorization_words():
    target = MIXED.parse_divisor("Q1+P")
    words = enumerate_factorizations(MIXED, target, 2)
    assert ["Q1", "P"] in words and ["P", "Q1"] in words
    for w in words:
        assert compose_word(MIXED, w) == target


def test_divisor_text_round_trip():
    for text in ["0", "Q1", "2Q1+Q3", "7Q1+6Q2+8Q3"]:
        assert CS3.format_divisor(div(text)) == text
    with pytest.raises(ValueError):
        CS3.parse_divisor("2R1")
    with pytest.raises(ValueError):
        CS3.parse_divisor("Q1-Q2")


SVG_NS = "{http://www.w3.org/2000/svg}"


def strands(svg_text):
    root = ET.fromstring(svg_text)
    return root.findall(f".//{SVG_NS}path")


def test_render_divisor_panel():
    svg = render_svg(CS3, div("Q1"))
    paths = strands(svg)
    assert len(paths) == 3
    by_source = {p.get("data-source"): p for p in paths}
    assert by_source["Q1"].get("data-target") == "Q2"
    assert by_source["Q2"].get("data-target") == "Q2"
    assert by_source["Q3"].get("data-target") == "Q3"
    assert all(p.get("data-winding") == "0" for p in paths)


def test_render_zero_divisor_horizontal():
    svg = render_svg(CS3, CS3.zero())
    for p in strands(svg):
        assert p.get("data-source") == p.get("data-target")
        assert p.get("data-winding") == "0"
        assert p.get("d").count("M") == 1


def test_render_windings():
    svg = render_svg(CS3, div("7Q1+6Q2+8Q3"))
    got = {p.get("data-source"): int(p.get("data-winding")) for p in strands(svg)}
    assert got == {"Q1": 2, "Q2": 2, "Q3": 3}
    for p in strands(svg):
        # one monotone piece per wrap plus one
        assert p.get("d").count("M") == int(p.get("data-winding")) + 1


def test_render_word_panels():
    svg = render_svg(CS3, ["Q1", "Q2", "Q3"])
    root = ET.fromstring(svg)
    panels = root.findall(f".//{SVG_NS}g")
    assert len(panels) == 3
    assert len(strands(svg)) == 9


def test_render_multi_cycle_needs_selection():
    with pytest.raises(ValueError):
        render_svg(MIXED, MIXED.parse_divisor("Q1"))
    svg = render_svg(MIXED, MIXED.parse_divisor("Q1"), cycle=0)
    assert len(strands(svg)) == 3
    with pytest.raises(ValueError):
        render_svg(MIXED, MIXED.parse_divisor("Q1+P"), cycle=0)
