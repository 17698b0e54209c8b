from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lbcut.errors import InputError
from lbcut.formats import (
    load_reduction_output,
    parse_cut,
    parse_fvs,
    parse_instance,
    parse_path_decomposition,
    parse_source_graph,
    serialize_cut,
    serialize_fvs,
    serialize_instance,
    serialize_path_decomposition,
    serialize_reduction_output,
    serialize_source_graph,
)
from lbcut.graph import Graph, Instance
from lbcut.oracles import random_proper_interval_instance
from lbcut.reductions_fvs import decode_fvs, forward_cut_fvs, gen_fvs
from lbcut.reductions_pw import decode_pw, forward_cut_pw, gen_pw
from lbcut.witnesses import PathDecomposition
from test_reductions_fvs import CASES as FVS_CASES
from test_reductions_pw import CASES as PW_CASES

MINIMAL = """
p lbc 2 1
s 1
t 2
b 1
l 1
e 1 2
"""


class TestParseInstance:
    def test_minimal(self):
        parsed = parse_instance(MINIMAL)
        assert parsed.instance.graph.m == 1
        assert parsed.instance.s == 0 and parsed.instance.t == 1
        assert parsed.model is None

    def test_interval_lines_build_a_model(self):
        text = MINIMAL + "i 1 0 1\ni 2 0.5 1.5\n"
        parsed = parse_instance(text)
        assert parsed.model.starts == (Fraction(0), Fraction(1, 2))
        assert parsed.model.ends == (Fraction(1), Fraction(3, 2))

    def test_fractional_coordinates(self):
        text = MINIMAL + "i 1 1/3 4/3\ni 2 0.25 1.25\n"
        parsed = parse_instance(text)
        assert parsed.model.starts[0] == Fraction(1, 3)

    @pytest.mark.parametrize(
        "mutation, message",
        [
            ("e 1 2", "duplicate edge"),
            ("e 1 3", "out of range"),
            ("q 1", "unknown record"),
            ("i 1 x 1", "bad rational"),
        ],
    )
    def test_diagnostics_carry_line_numbers(self, mutation, message):
        with pytest.raises(InputError) as err:
            parse_instance(MINIMAL + mutation + "\n")
        assert message in str(err.value) and "line" in str(err.value)

    def test_missing_header_field(self):
        broken = "\n".join(
            line for line in MINIMAL.splitlines() if not line.startswith("b")
        )
        with pytest.raises(InputError, match="missing 'b'"):
            parse_instance(broken)

    def test_lambda_clamp_warns(self):
        parsed = parse_instance(MINIMAL.replace("l 1", "l 99"))
        assert parsed.instance.lam == 2
        assert any("lambda" in w for w in parsed.warnings)

    def test_round_trip_fuzz(self):
        for seed in range(25):
            inst, model = random_proper_interval_instance(9, seed=seed)
            text = serialize_instance(inst, model)
            parsed = parse_instance(text)
            assert parsed.instance == inst
            assert parsed.model == model
            assert serialize_instance(parsed.instance, parsed.model) == text

    @given(
        num=st.integers(min_value=-(10**6), max_value=10**6),
        den=st.integers(min_value=1, max_value=10**4),
    )
    @settings(max_examples=150, deadline=None)
    def test_rational_round_trip(self, num, den):
        from lbcut.formats import _fmt_rational, _parse_rational

        x = Fraction(num, den)
        assert _parse_rational(_fmt_rational(x), 1) == x


class TestAuxiliaryFormats:
    def test_source_graph_round_trip(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert parse_source_graph(serialize_source_graph(g)) == g

    def test_cut_round_trip(self):
        g = Graph(3, [(0, 1), (1, 2)])
        cut = frozenset([(0, 1)])
        assert parse_cut(serialize_cut(cut), g) == cut

    def test_cut_rejects_non_edges(self):
        g = Graph(3, [(0, 1)])
        with pytest.raises(InputError):
            parse_cut("e 2 3\n", g)

    def test_fvs_round_trip(self):
        g = Graph(5, [])
        w = frozenset([0, 3])
        assert parse_fvs(serialize_fvs(w), g) == w

    def test_pd_round_trip(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        pd = PathDecomposition(
            tuple(frozenset(b) for b in [{0, 1}, {1, 2}, {2, 3}])
        )
        assert parse_path_decomposition(serialize_path_decomposition(pd), g) == pd


def paths_equal_up_to_reversal(a, b):
    if a.keys() != b.keys():
        return False
    return all(b[tag] in (seq, tuple(reversed(seq))) for tag, seq in a.items())


class TestReductionRoundTrip:
    def test_pw_output_reloads_and_decodes(self):
        cq, clique = PW_CASES[0]
        out = gen_pw(cq)
        text = serialize_reduction_output(out)
        reloaded = load_reduction_output(text, source=cq)
        assert reloaded.instance == out.instance
        assert paths_equal_up_to_reversal(out.paths, reloaded.paths)
        cut = forward_cut_pw(reloaded, clique)
        assert decode_pw(reloaded, cut) == clique

    def test_fvs_output_reloads_and_decodes(self):
        mc, clique = FVS_CASES[1]
        out = gen_fvs(mc)
        reloaded = load_reduction_output(
            serialize_reduction_output(out), source=mc
        )
        assert reloaded.instance == out.instance
        assert paths_equal_up_to_reversal(out.paths, reloaded.paths)
        cut = forward_cut_fvs(reloaded, clique)
        assert decode_fvs(reloaded, cut) == clique
