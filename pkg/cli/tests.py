import io
import json
from unittest import mock

from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase, override_settings

from qalg_project.settings import integer_setting
from quatalg.models import Mismatch, MismatchReport

from .models import QuerySpec
from .runner import emit_table, run
from .serializers import TABLE_HEADER, canonical_json


def call(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


class GoldenTranscriptTests(SimpleTestCase):
    def test_hilbert(self):
        status, out, _err = call("hilbert", "-a", "2", "-b", "3", "-p", "2")
        self.assertEqual(status, 0)
        self.assertEqual(out, '{"place":"2","symbol":-1}\n')

    def test_hilbert_real_place(self):
        status, out, _err = call("hilbert", "-a", "-1", "-b", "-1", "-p", "real")
        self.assertEqual(status, 0)
        self.assertEqual(out, '{"place":"real","symbol":-1}\n')

    def test_classify(self):
        status, out, _err = call(
            "classify", "--d", "3", "--ell", "5", "--kind", "dihedral", "-p", "13", "-q", "7"
        )
        self.assertEqual(status, 0)
        self.assertEqual(out, '{"case":"theorem-main/case1","verdict":"division"}\n')

    def test_classify_defaults(self):
        _status, out, _err = call("classify", "-p", "3", "-q", "2")
        self.assertEqual(json.loads(out), {"case": "ramification", "verdict": "division"})
        _status, out, _err = call("classify", "--d", "17", "-p", "11", "-q", "2")
        self.assertEqual(json.loads(out)["case"], "quadratic/case2")
        _status, out, _err = call("classify", "--alpha", "2", "-p", "13", "-q", "7")
        self.assertEqual(json.loads(out), {"case": "kummer/case1", "verdict": "division"})

    def test_ramify(self):
        status, out, _err = call("ramify", "-a", "3", "-b", "2")
        self.assertEqual(status, 0)
        self.assertEqual(out, '{"a":3,"b":2,"places":["2","3"],"reduced_discriminant":6}\n')

    def test_verify(self):
        status, out, err = call("verify", "--d-max", "60", "--prime-bound", "100")
        self.assertEqual(status, 0)
        document = json.loads(out)
        self.assertEqual(document["mismatches"], [])
        self.assertGreater(document["checked"], 0)
        self.assertIn("0 discrepancias", err)


class ExitStatusTests(SimpleTestCase):
    def test_invalid_input(self):
        cases = [
            ("hilbert", "-a", "0", "-b", "3", "-p", "2"),
            ("hilbert", "-a", "2", "-b", "3", "-p", "4"),
            ("hilbert", "-a", "x", "-b", "3", "-p", "2"),
            ("classify", "-p", "4", "-q", "3"),
            ("classify", "--d", "12", "-p", "13", "-q", "7"),
            ("classify", "--d", "3", "--kind", "dihedral", "-p", "13", "-q", "7"),
            ("classify", "--alpha", "8", "-p", "13", "-q", "7"),
            ("table", "--d", "12", "--prime-bound", "10"),
            ("table", "--prime-bound", "10"),
            ("table", "--d-min", "5", "--d-max", "-5", "--prime-bound", "10"),
            ("verify", "--d-max", "3", "--prime-bound", "10", "--threads", "0"),
        ]
        for argv in cases:
            with self.subTest(argv=" ".join(argv)):
                status, out, err = call(*argv)
                self.assertEqual(status, 2)
                self.assertEqual(out, "")
                self.assertIn("CommandError", err)

    def test_malformed_arguments(self):
        for argv in (("hilbert", "-a", "2"), ("frobnicate",), ()):
            with self.subTest(argv=argv):
                status, out, err = call(*argv)
                self.assertEqual(status, 2)
                self.assertEqual(out, "")
                self.assertTrue(err)

    def test_out_of_range_integers(self):
        big = str(2**64 + 13)
        cases = [
            ("hilbert", "-a", str(2**63), "-b", "3", "-p", "2"),
            ("hilbert", "-a", "2", "-b", "3", "-p", big),
            ("ramify", "-a", str(2**64), "-b", "3"),
            ("classify", "-p", big, "-q", "3"),
            ("classify", "--d", str(2**63), "-p", "13", "-q", "7"),
            ("table", "--d", str(2**63), "--prime-bound", "10"),
            ("verify", "--d-max", "3", "--prime-bound", str(-(2**63) - 1)),
        ]
        for argv in cases:
            with self.subTest(argv=" ".join(argv)):
                status, out, err = call(*argv)
                self.assertEqual(status, 2)
                self.assertEqual(out, "")
                self.assertIn("CommandError", err)

    @override_settings(QALG_FACTOR_BOUND=100)
    def test_factorization_beyond_bound(self):
        status, out, err = call("ramify", "-a", str(1000003 * 1000033), "-b", "3")
        self.assertEqual(status, 2)
        self.assertEqual(out, "")
        self.assertIn("1000036000099", err)

    @override_settings(QALG_THREADS=0)
    def test_bad_thread_setting(self):
        status, out, err = call("verify", "--d-max", "3", "--prime-bound", "10")
        self.assertEqual(status, 2)
        self.assertEqual(out, "")
        self.assertIn("QALG_THREADS", err)

    def test_setup_failure(self):
        error = ImproperlyConfigured("Se esperaba un entero en QALG_*, no 'x'.")
        with mock.patch("django.setup", side_effect=error):
            status, out, err = call("hilbert", "-a", "2", "-b", "3", "-p", "2")
        self.assertEqual(status, 2)
        self.assertEqual(out, "")
        self.assertIn("QALG_*", err)

    def test_integer_setting(self):
        self.assertEqual(integer_setting("8"), 8)
        for value in ("x", "", None):
            with self.subTest(value=value):
                with self.assertRaises(ImproperlyConfigured):
                    integer_setting(value)

    def test_verify_mismatch(self):
        report = MismatchReport(
            checked=1,
            mismatches=(Mismatch(check="theorem-main", d=5, p=3, q=7, expected="split", got="division"),),
        )
        with mock.patch("cli.runner.cross_validate", return_value=report):
            status, out, err = call("verify", "--d-max", "5", "--prime-bound", "10")
        self.assertEqual(status, 1)
        self.assertEqual(json.loads(out)["mismatches"][0]["got"], "division")
        self.assertIn("1 discrepancias", err)


class TableTests(SimpleTestCase):
    def test_csv_header_on_empty_range(self):
        status, out, _err = call(
            "table", "--d-min", "0", "--d-max", "1", "--prime-bound", "10", "--format", "csv"
        )
        self.assertEqual(status, 0)
        self.assertEqual(out, ",".join(TABLE_HEADER) + "\r\n")

    def test_rows_for_matched_pairs(self):
        rows = emit_table(QuerySpec(command="table", d_values=(-3,), prime_bound=8))
        self.assertEqual(
            [(row["p"], row["q"]) for row in rows],
            [(3, 2), (3, 3), (3, 5), (5, 3), (5, 7), (7, 3), (7, 5), (7, 7)],
        )
        self.assertTrue(all(row["delta"] == -3 for row in rows))

    def test_include_engine(self):
        spec = QuerySpec(command="table", d_values=(-3,), prime_bound=8, include_engine=True)
        rows = emit_table(spec)
        self.assertEqual(len(rows), 16)
        engine_pairs = [(row["p"], row["q"]) for row in rows if row["case"] == "engine"]
        self.assertIn((5, 2), engine_pairs)
        self.assertIn((5, 5), engine_pairs)

    def test_quadratic_case2_row(self):
        _status, out, _err = call("table", "--d", "17", "--prime-bound", "12")
        rows = json.loads(out)["rows"]
        row = next(row for row in rows if (row["p"], row["q"]) == (11, 2))
        self.assertEqual(row["verdict"], "division")
        self.assertEqual(row["case"], "quadratic/case2")
        self.assertEqual((row["leg_delta_p"], row["leg_delta_q"]), (-1, 1))

    def test_csv_rows_sorted(self):
        _status, out, _err = call(
            "table", "--d", "5", "--d", "-3", "--prime-bound", "8", "--format", "csv"
        )
        lines = out.split("\r\n")
        self.assertEqual(lines[0], ",".join(TABLE_HEADER))
        self.assertEqual(lines[1], "-3,-3,3,2,split,quadratic/case2,0,-1")
        self.assertEqual(lines[-1], "")
        d_column = [int(line.split(",")[0]) for line in lines[1:-1]]
        self.assertEqual(d_column, sorted(d_column))

    def test_text_format(self):
        status, out, _err = call("ramify", "-a", "-1", "-b", "-1", "--format", "text")
        self.assertEqual(status, 0)
        header, values = out.splitlines()
        self.assertEqual(header.split(), ["a", "b", "places", "reduced_discriminant"])
        self.assertEqual(values.split(), ["-1", "-1", "2", "real", "2"])


class DeterminismTests(SimpleTestCase):
    def test_json_round_trip(self):
        for argv in (
            ("hilbert", "-a", "5", "-b", "3", "-p", "5"),
            ("ramify", "-a", "7", "-b", "47"),
            ("classify", "--d", "-23", "--kind", "unramified_abelian", "--ell", "3", "-p", "7", "-q", "3"),
            ("table", "--d-min", "-7", "--d-max", "7", "--prime-bound", "14"),
            ("verify", "--d-max", "6", "--prime-bound", "20"),
        ):
            with self.subTest(argv=argv):
                _status, out, _err = call(*argv)
                self.assertEqual(canonical_json(json.loads(out)) + "\n", out)

    def test_threads_do_not_change_output(self):
        base = ("verify", "--d-max", "10", "--prime-bound", "30")
        self.assertEqual(call(*base, "--threads", "1")[1], call(*base, "--threads", "4")[1])
