import json

import pytest

from revpass.cli import main
from revpass.permutation import parse_permutation


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestTier:
    def test_text(self, capsys):
        code, out = run_cli(capsys, "tier", "2413")
        assert code == 0
        assert out == "2\n"

    def test_json(self, capsys):
        code, out = run_cli(capsys, "tier", "426135", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload == {
            "schema": "revpass.tier/1",
            "permutation": "426135",
            "tier": 4,
        }

    def test_bad_permutation_is_usage_error(self, capsys):
        assert main(["tier", "2414"]) == 2


class TestTraceAndMachine:
    def test_trace_text(self, capsys):
        code, out = run_cli(capsys, "trace", "2413")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "permutation 2413  rev-tier 2"
        assert lines.count("pass 1") == 1
        assert "pass 3" in lines

    def test_trace_json(self, capsys):
        code, out = run_cli(capsys, "trace", "231", "--format", "json")
        payload = json.loads(out)
        assert payload["schema"] == "revpass.trace/1"
        assert payload["tier"] == 1
        assert len(payload["passes"]) == 2

    def test_machine_text(self, capsys):
        code, out = run_cli(capsys, "machine", "2413", "--stacks", "3")
        assert code == 0
        assert "sorted" in out.splitlines()[0]
        code, out = run_cli(capsys, "machine", "2413", "--stacks", "2")
        assert "not sorted" in out.splitlines()[0]

    def test_machine_json(self, capsys):
        code, out = run_cli(
            capsys, "machine", "231", "--stacks", "2", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["sorted"] is True
        assert payload["num_stacks"] == 2


class TestTable:
    def test_exact_csv_reference_row(self, capsys):
        code, out = run_cli(
            capsys, "table", "exact", "--max-n", "5", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,t=0,t=1,t=2,t=3"
        assert lines[5] == "5,42,47,26,5"

    def test_cumulative_json(self, capsys):
        code, out = run_cli(
            capsys, "table", "cumulative", "--max-n", "6", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["rows"][5] == [132, 380, 608, 704, 720]

    def test_refined_csv(self, capsys):
        code, out = run_cli(
            capsys, "table", "refined", "--max-n", "4", "--format", "csv"
        )
        assert out.splitlines()[0] == "family,n,t,k,count"
        assert "eta,1,0,1,1" in out

    def test_cap_is_usage_error(self, capsys):
        assert main(["table", "exact", "--max-n", "11"]) == 2

    def test_text_format(self, capsys):
        code, out = run_cli(capsys, "table", "exact", "--max-n", "4")
        assert code == 0
        assert "t=0" in out.splitlines()[0]

    def test_worker_count_does_not_change_output(self, capsys):
        _, serial = run_cli(
            capsys, "table", "exact", "--max-n", "6", "--format", "csv",
            "--workers", "1",
        )
        _, parallel = run_cli(
            capsys, "table", "exact", "--max-n", "6", "--format", "csv",
            "--workers", "3",
        )
        assert serial == parallel


class TestBasis:
    def test_default_tier1(self, capsys):
        code, out = run_cli(capsys, "basis", "--tier", "1")
        assert code == 0
        assert out.splitlines() == ["2413", "2431", "23154"]

    def test_json_report(self, capsys):
        code, out = run_cli(
            capsys, "basis", "--tier", "1", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["complete"] is True
        assert payload["elements"]["5"] == ["23154"]

    def test_slow_guard(self, capsys):
        assert main(["basis", "--tier", "3", "--max-len", "11"]) == 2


class TestCounts:
    def test_av_count_text(self, capsys):
        code, out = run_cli(
            capsys, "av-count", "4321", "4213", "--max-n", "6"
        )
        assert out.splitlines() == [
            "1: 1",
            "2: 2",
            "3: 6",
            "4: 22",
            "5: 89",
            "6: 380",
        ]

    def test_av_count_csv(self, capsys):
        code, out = run_cli(
            capsys, "av-count", "231", "--max-n", "4", "--format", "csv"
        )
        assert out.splitlines() == ["n,count", "1,1", "2,2", "3,5", "4,14"]

    def test_entringer_text(self, capsys):
        code, out = run_cli(capsys, "entringer", "--max-n", "5")
        assert out.splitlines()[4] == "5: 0 2 4 5 5  (sum 16)"

    def test_entringer_csv(self, capsys):
        code, out = run_cli(
            capsys, "entringer", "--max-n", "4", "--format", "csv"
        )
        lines = out.splitlines()
        assert lines[0] == "n,k=1,k=2,k=3,k=4,sum"
        assert lines[4] == "4,0,1,2,2,5"

    def test_family_json(self, capsys):
        code, out = run_cli(capsys, "family", "6", "--format", "json")
        payload = json.loads(out)
        assert payload["total"] == 16
        assert payload["members_by_k"]["2"] == ["241635", "241653"]

    def test_family_bad_length(self, capsys):
        assert main(["family", "2"]) == 2


class TestBijection:
    def test_forward(self, capsys):
        code, out = run_cli(capsys, "bijection", "f", "21534")
        assert code == 0
        assert out == "241653\n"

    def test_inverse(self, capsys):
        code, out = run_cli(capsys, "bijection", "finv", "6247153")
        assert out == "426351\n"

    def test_non_alternating_rejected(self, capsys):
        assert main(["bijection", "f", "123"]) == 2

    def test_round_trip_through_text(self, capsys):
        _, out = run_cli(capsys, "bijection", "f", "21534")
        _, back = run_cli(capsys, "bijection", "finv", out.strip())
        assert back == "21534\n"


class TestSeries:
    def test_mu0_text(self, capsys):
        code, out = run_cli(capsys, "series", "mu0", "--order", "5")
        assert out.splitlines() == ["0: 0", "1: 0", "2: 0", "3: 1", "4: 6", "5: 26"]

    def test_wilf_json(self, capsys):
        code, out = run_cli(
            capsys, "series", "wilf", "--order", "6", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["coefficients"] == [1, 1, 2, 6, 22, 89, 380]

    def test_tier2_prefix(self, capsys):
        code, out = run_cli(capsys, "series", "tier2", "--order", "7")
        assert out.splitlines()[-1] == "7: 1702"

    def test_order_cap_is_usage_error(self, capsys):
        assert main(["series", "mu1", "--order", "40"]) == 2


class TestVerifyCommand:
    def test_series_suite_passes(self, capsys):
        code = main(["verify", "series", "--max-n", "4"])
        out = capsys.readouterr().out
        assert code == 0
        assert "FAIL" not in out
        assert out.count("PASS") == 7

    def test_unknown_suite_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nonsense"])
        assert exc.value.code == 2


class TestOutputRoundTrip:
    def test_printed_permutations_reparse(self, capsys):
        _, out = run_cli(capsys, "basis", "--tier", "2", "--max-len", "7")
        for line in out.splitlines():
            perm = parse_permutation(line)
            assert len(perm) >= 5
        _, out = run_cli(capsys, "family", "5")
        for line in out.splitlines()[1:]:
            members = line.split(": ", 1)[1].split()
            for text in members:
                parse_permutation(text)
