"""Tests for manifest files and the command-line interface."""

import json

import pytest

from lieforms import cli
from lieforms.errors import JacobiError, ManifestError
from lieforms.fields import (
    cyclotomic_field,
    gaussian_rationals,
    quadratic_field,
)
from lieforms.liealg import direct_sum
from lieforms.catalog import g_lambda, heisenberg
from lieforms.manifest import (
    Manifest,
    algebra_entity,
    builtin_field,
    field_entity,
    parse_manifest,
    serialize_entity,
    serialize_manifest,
)


def run_cli(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def write_lines(tmp_path, name, *lines):
    path = tmp_path / name
    path.write_text("".join(line + "\n" for line in lines),
                    encoding="utf-8")
    return str(path)


def gaussian_entities():
    Qi = gaussian_rationals()
    i = Qi.generator()
    lines = [serialize_entity(field_entity("Q(i)", Qi, "Q"))]
    lines.append(serialize_entity(
        algebra_entity("gp", "Q(i)", g_lambda(Qi, Qi.one() + i))))
    lines.append(serialize_entity(
        algebra_entity("gm", "Q(i)", g_lambda(Qi, Qi.one() - i))))
    lines.append(serialize_entity(
        algebra_entity("gi", "Q(i)", g_lambda(Qi, i))))
    return lines


class TestManifest:
    def test_builtin_field_specs(self):
        assert builtin_field("Q").is_rationals
        assert builtin_field("Q(i)") == gaussian_rationals()
        assert builtin_field("Q(sqrt2)") == quadratic_field(2)
        assert builtin_field("Q(sqrt-5)") == quadratic_field(-5)
        assert builtin_field("Q(zeta8)") == cyclotomic_field(8)
        assert builtin_field("Q(pi)") is None

    def test_round_trip_is_identity_on_canonical_text(self):
        raw = "".join(line + "\n" for line in gaussian_entities())
        man = parse_manifest(raw)
        assert serialize_manifest(man) == raw
        again = parse_manifest(serialize_manifest(man))
        assert serialize_manifest(again) == raw

    def test_parsed_algebra_matches_the_constructor(self):
        man = parse_manifest("\n".join(gaussian_entities()))
        Qi = gaussian_rationals()
        L = man.algebra("gp")
        assert L.field == Qi
        assert L.brackets == g_lambda(Qi, Qi.one() + Qi.generator()).brackets

    def test_algebras_resolve_builtin_fields_without_entities(self):
        text = ('{"name": "h", "field": "Q", "dim": 3, "brackets": '
                '[{"i": 1, "j": 2, "k": 3, "coeff": "1"}]}')
        man = parse_manifest(text)
        assert man.algebra("h").brackets == \
            heisenberg(builtin_field("Q")).brackets

    def test_multihop_towers_parse_and_resolve_literals(self):
        text = "\n".join([
            '{"name": "E", "base": "Q(sqrt2)", "gen": "i", "minpoly": '
            '["1", "0", "1"], "automorphisms": [["0", "1"], ["0", "-1"]]}',
            '{"name": "T", "base": "E", "gen": "r", "minpoly": '
            '["-1r2", "0", "1"], "automorphisms": [["0", "1"], ["0", "-1"]]}',
        ])
        man = parse_manifest(text)
        T = man.field("T")
        assert T.absolute_degree() == 8
        r = T.generator()
        s2 = (r * r) * (r * r)
        assert s2 == T.from_rational(2)
        canon = serialize_manifest(man)
        assert serialize_manifest(parse_manifest(canon)) == canon

    def test_parse_rejections(self):
        with pytest.raises(ManifestError):
            parse_manifest("not json")
        with pytest.raises(ManifestError):
            parse_manifest('{"name": "x", "field": "Q", "dim": 2, '
                           '"brackets": [{"i": 2, "j": 1, "k": 1, '
                           '"coeff": "1"}]}')
        with pytest.raises(ManifestError):
            parse_manifest('{"name": "x", "field": "Q", "dim": 2, '
                           '"brackets": [{"i": 1, "j": 2, "k": 5, '
                           '"coeff": "1"}]}')
        with pytest.raises(ManifestError):
            parse_manifest('{"name": "x", "field": "nowhere", "dim": 1, '
                           '"brackets": []}')
        with pytest.raises(ManifestError):
            parse_manifest('{"name": "x", "field": "Q", "dim": 1}')
        with pytest.raises(ManifestError):
            parse_manifest('{"name": "x", "field": "Q", "dim": 2, '
                           '"brackets": [{"i": 1, "j": 2, "k": 1, '
                           '"coeff": 3}]}')

    def test_duplicates_must_agree(self):
        line = ('{"name": "h", "field": "Q", "dim": 3, "brackets": '
                '[{"i": 1, "j": 2, "k": 3, "coeff": "1"}]}')
        other = ('{"name": "h", "field": "Q", "dim": 3, "brackets": '
                 '[{"i": 1, "j": 2, "k": 3, "coeff": "2"}]}')
        man = parse_manifest(line + "\n" + line)
        assert man.algebra_names == ("h",)
        with pytest.raises(ManifestError):
            parse_manifest(line + "\n" + other)

    def test_jacobi_failure_surfaces_at_use(self):
        text = ('{"name": "bad", "field": "Q", "dim": 3, "brackets": ['
                '{"i": 1, "j": 2, "k": 3, "coeff": "1"}, '
                '{"i": 1, "j": 3, "k": 1, "coeff": "1"}, '
                '{"i": 2, "j": 3, "k": 2, "coeff": "1"}]}')
        man = parse_manifest(text)
        with pytest.raises(JacobiError) as info:
            man.algebra("bad")
        assert info.value.triple == (1, 2, 3)


class TestCommandLine:
    def test_catalog_then_invariant_c_prints_two(self, capsys, tmp_path):
        rc, out = run_cli(capsys, "catalog", "g_lambda", "--field", "Q(i)",
                          "--lambda", "1i", "--name", "g_i")
        assert rc == 0
        path = write_lines(tmp_path, "m.jsonl", *out.splitlines())
        rc, out = run_cli(capsys, "invariant-c", "g_i", "--manifest", path)
        assert rc == 0
        assert out.strip() == "2"

    def test_catalog_output_reparses_to_the_same_algebra(self, capsys):
        rc, out = run_cli(capsys, "catalog", "g_lambda", "--field", "Q(i)",
                          "--lambda", "1+1i", "--name", "gp")
        assert rc == 0
        man = parse_manifest(out)
        Qi = gaussian_rationals()
        assert man.algebra("gp").brackets == \
            g_lambda(Qi, Qi.one() + Qi.generator()).brackets

    def test_check_reports_fingerprint(self, capsys, tmp_path):
        path = write_lines(tmp_path, "m.jsonl", *gaussian_entities())
        rc, out = run_cli(capsys, "check", "gp", "--manifest", path)
        assert rc == 0
        assert "jacobi: ok" in out
        assert "two_step: (8, 2)" in out

    def test_check_jacobi_failure_exits_one(self, capsys, tmp_path):
        path = write_lines(
            tmp_path, "bad.jsonl",
            '{"name": "bad", "field": "Q", "dim": 3, "brackets": ['
            '{"i": 1, "j": 2, "k": 3, "coeff": "1"}, '
            '{"i": 1, "j": 3, "k": 1, "coeff": "1"}, '
            '{"i": 2, "j": 3, "k": 2, "coeff": "1"}]}')
        rc, out = run_cli(capsys, "check", "bad", "--manifest", path)
        assert rc == 1
        assert "(1, 2, 3)" in out

    def test_conjugate_by_image_index_and_identity(self, capsys, tmp_path):
        path = write_lines(tmp_path, "m.jsonl", *gaussian_entities())
        rc, by_image = run_cli(capsys, "conjugate", "gp", "--sigma=-1i",
                               "--name", "out", "--manifest", path)
        assert rc == 0
        rc, by_index = run_cli(capsys, "conjugate", "gp", "--sigma", "1",
                               "--name", "out", "--manifest", path)
        assert rc == 0
        assert by_image == by_index
        entity = json.loads(by_image)
        man = parse_manifest("\n".join(gaussian_entities()) + "\n" +
                             by_image)
        assert man.algebra("out").brackets == man.algebra("gm").brackets
        assert entity["field"] == "Q(i)"
        rc, by_id = run_cli(capsys, "conjugate", "gp", "--sigma", "id",
                            "--name", "out2", "--manifest", path)
        assert rc == 0
        fixed = parse_manifest("\n".join(gaussian_entities()) + "\n" + by_id)
        assert fixed.algebra("out2").brackets == fixed.algebra("gp").brackets

    def test_restrict_and_extend_emit_entities(self, capsys, tmp_path):
        path = write_lines(tmp_path, "m.jsonl", *gaussian_entities())
        rc, out = run_cli(capsys, "restrict", "gp", "--to", "Q",
                          "--name", "gpq", "--manifest", path)
        assert rc == 0
        entity = json.loads(out)
        assert entity["dim"] == 20
        assert entity["field"] == "Q"

        rc, out = run_cli(capsys, "catalog", "heisenberg", "--field", "Q",
                          "--name", "h3")
        assert rc == 0
        hq = write_lines(tmp_path, "h.jsonl", *out.splitlines())
        rc, out = run_cli(capsys, "extend", "h3", "--to", "Q(i)",
                          "--manifest", hq)
        assert rc == 0
        assert json.loads(out)["field"] == "Q(i)"

    def test_verify_sumconjugate_exits_zero(self, capsys, tmp_path):
        rc, out = run_cli(capsys, "catalog", "heisenberg", "--field", "Q(i)",
                          "--name", "h3")
        path = write_lines(tmp_path, "h.jsonl", *out.splitlines())
        rc, out = run_cli(capsys, "verify-sumconjugate", "h3", "--over", "Q",
                          "--manifest", path)
        assert rc == 0
        assert "verified: true" in out
        assert "group_order: 2" in out

    def test_decompose_certified_exits_zero(self, capsys, tmp_path):
        Q = builtin_field("Q")
        hh = direct_sum(heisenberg(Q), heisenberg(Q))
        path = write_lines(tmp_path, "hh.jsonl",
                           serialize_entity(algebra_entity("hh", "Q", hh)))
        rc, out = run_cli(capsys, "decompose", "hh", "--manifest", path)
        assert rc == 0
        assert "summands: 2" in out
        assert out.count("CertifiedIndecomposable") == 2
        assert "verified: true" in out

    def test_decompose_heuristic_exits_three(self, capsys, tmp_path):
        deep = [
            '{"name": "E", "base": "Q(sqrt2)", "gen": "i", "minpoly": '
            '["1", "0", "1"], "automorphisms": [["0", "1"], ["0", "-1"]]}',
            '{"name": "T", "base": "E", "gen": "r", "minpoly": '
            '["-1r2", "0", "1"], "automorphisms": [["0", "1"], ["0", "-1"]]}',
        ]
        path = write_lines(tmp_path, "deep.jsonl", *deep)
        rc, out = run_cli(capsys, "catalog", "r3_lambda", "--field", "T",
                          "--lambda", "1r", "--name", "deep",
                          "--manifest", path)
        assert rc == 0
        path = write_lines(tmp_path, "deep2.jsonl", *deep, *out.splitlines())
        rc, out = run_cli(capsys, "restrict", "deep", "--to", "E",
                          "--name", "deepE", "--manifest", path)
        assert rc == 0
        path = write_lines(tmp_path, "deep3.jsonl",
                           *open(path, encoding="utf-8").read().splitlines(),
                           *out.splitlines())
        rc, out = run_cli(capsys, "decompose", "deepE", "--manifest", path)
        assert rc == 3
        assert "HeuristicIndecomposable" in out

    def test_count_forms_command(self, capsys, tmp_path):
        path = write_lines(tmp_path, "m.jsonl", *gaussian_entities())
        rc, out = run_cli(capsys, "count-forms", "gp", "--over", "Q",
                          "--manifest", path)
        assert rc == 0
        assert out.splitlines()[0] == "2"
        # lambda = i has conjugates the oracle cannot separate: honest 3
        rc, out = run_cli(capsys, "count-forms", "gi", "--over", "Q",
                          "--manifest", path)
        assert rc == 3

    def test_match_exit_codes(self, capsys, tmp_path):
        Qi = gaussian_rationals()
        lam = Qi.one() + Qi.generator()
        lam_bar = Qi.one() - Qi.generator()
        mixed = direct_sum(g_lambda(Qi, lam), g_lambda(Qi, lam_bar))
        doubled = direct_sum(g_lambda(Qi, lam), g_lambda(Qi, lam))
        path = write_lines(
            tmp_path, "m.jsonl",
            serialize_entity(field_entity("Q(i)", Qi, "Q")),
            serialize_entity(algebra_entity("mixed", "Q(i)", mixed)),
            serialize_entity(algebra_entity("doubled", "Q(i)", doubled)))
        rc, out = run_cli(capsys, "match", "mixed", "mixed",
                          "--manifest", path)
        assert rc == 0
        assert "status: matched" in out
        rc, out = run_cli(capsys, "match", "mixed", "doubled",
                          "--manifest", path)
        assert rc == 1
        assert "status: refuted" in out

    def test_pfaffian_output(self, capsys, tmp_path):
        path = write_lines(tmp_path, "m.jsonl", *gaussian_entities())
        rc, out = run_cli(capsys, "pfaffian", "gp", "--manifest", path)
        assert rc == 0
        assert "type: (8, 2)" in out
        assert "form: x^4 + (1+1i)x^2y^2 + y^4" in out

    def test_invariant_c_undefined_exits_two(self, capsys, tmp_path):
        rc, out = run_cli(capsys, "catalog", "g_lambda", "--field", "Q",
                          "--lambda", "1", "--name", "g1")
        path = write_lines(tmp_path, "m.jsonl", *out.splitlines())
        rc, _ = run_cli(capsys, "invariant-c", "g1", "--manifest", path)
        assert rc == 2

    def test_json_reports(self, capsys, tmp_path):
        path = write_lines(tmp_path, "m.jsonl", *gaussian_entities())
        rc, out = run_cli(capsys, "invariant-c", "gi", "--json",
                          "--manifest", path)
        assert rc == 0
        payload = json.loads(out)
        assert payload["command"] == "invariant-c"
        assert payload["c"] == "2"
        rc, out = run_cli(capsys, "decompose", "gp", "--json",
                          "--manifest", path)
        assert rc == 0
        payload = json.loads(out)
        assert payload["verified"] is True
        assert payload["summands"][0]["certificate"] == \
            "CertifiedIndecomposable"

    def test_input_errors_exit_two(self, capsys, tmp_path):
        path = write_lines(tmp_path, "bad.jsonl", "garbage")
        rc, _ = run_cli(capsys, "check", "x", "--manifest", path)
        assert rc == 2
        good = write_lines(tmp_path, "m.jsonl", *gaussian_entities())
        rc, _ = run_cli(capsys, "check", "nosuch", "--manifest", good)
        assert rc == 2
        rc, _ = run_cli(capsys, "catalog", "nofamily")
        assert rc == 2
        rc, _ = run_cli(capsys, "catalog", "g_lambda", "--field", "Q")
        assert rc == 2  # missing --lambda

    def test_catalog_zero_parameter_exits_two(self, capsys):
        rc, _ = run_cli(capsys, "catalog", "r3_lambda", "--field", "Q",
                        "--lambda", "0")
        assert rc == 2
