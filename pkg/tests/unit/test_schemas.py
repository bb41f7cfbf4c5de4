import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from src.api.schemas import RUN_REPORT_SCHEMA, BraidWordModel, MFWReportModel, RunReport
from src.application.engine_manager import EngineManager
from src.application.mfw_analysis import mfw_report, quadrant_scan
from src.application.settings import EngineSettings
from src.domain.braid_word import BraidWord, parse_word
from src.infrastructure.report_writer import csv_text, plot_quadrant, render, write_csv


class TestSchemas(unittest.TestCase):
    """Test suite for the JSON models."""

    def setUp(self):
        EngineManager().configure(EngineSettings(progress=False))

    def test_braid_word_model(self):
        """Test the letter form and the integer form beyond 'y'."""
        model = BraidWordModel.from_word(parse_word("aB"))
        self.assertEqual((model.strands, model.word), (3, "aB"))
        self.assertEqual(model.to_word(), parse_word("aB"))
        big = BraidWord(30, [(29, -1)])
        model = BraidWordModel.from_word(big)
        self.assertEqual(model.word, [-29])
        self.assertEqual(model.to_word(), big)

    def test_mfw_report_model(self):
        """Test that the deficit survives as an exact rational string."""
        model = MFWReportModel.from_report(mfw_report(parse_word("aaab")))
        self.assertEqual(model.deficit_at_b, "1")
        self.assertEqual(model.deficit(), Fraction(1))
        self.assertEqual(model.word.word, "aaab")
        with self.assertRaises(ValidationError):
            MFWReportModel(**{**model.model_dump(), "D_plus_rep": -1})

    def test_run_report_json(self):
        """Test the schema tag, expectation bookkeeping and JSON round trip."""
        report = RunReport(command="mfw", inputs={"word": "aaa"})
        self.assertTrue(report.expect("c", 3, 3))
        self.assertTrue(report.passed)
        self.assertFalse(report.expect("deficit", "0", "1"))
        self.assertFalse(report.passed)
        report.expect("forced", True, False, passed=True)
        text = report.to_json()
        self.assertEqual(json.loads(text)["schema"], RUN_REPORT_SCHEMA)
        again = RunReport.from_json(text)
        self.assertEqual(again.schema_id, RUN_REPORT_SCHEMA)
        self.assertEqual(len(again.expectations), 3)
        self.assertFalse(again.passed)


class TestReportWriter(unittest.TestCase):
    """Test suite for rendering and file output."""

    def setUp(self):
        EngineManager().configure(EngineSettings(progress=False))
        self.tmp = tempfile.TemporaryDirectory()
        self.directory = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_render_table(self):
        """Test the human-readable grid with nested results and checks."""
        report = RunReport(command="mfw")
        report.results["c"] = 3
        report.results["knot"] = {"d_minus": 2, "d_plus": 4}
        report.expect("c", 3, 3)
        report.timings["total"] = 0.25
        text = render(report)
        self.assertIn("quantity", text)
        self.assertIn("d_plus", text)
        self.assertIn("PASS", text)
        self.assertIn("1/1 checks passed", text)
        self.assertEqual(json.loads(render(report, as_json=True))["command"], "mfw")

    def test_csv(self):
        """Test CSV text and the written file."""
        self.assertEqual(csv_text(("b", "c"), [(2, 3)]), "b,c\n2,3\n")
        path = self.directory / "sub" / "points.csv"
        write_csv(path, ("b", "c"), [(2, 3), (3, 4)])
        self.assertEqual(path.read_text().splitlines(), ["b,c", "2,3", "3,4"])

    def test_plot_quadrant(self):
        """Test that the quadrant plot is written as a PNG."""
        scan = quadrant_scan(parse_word("aaa"), 3, 2)
        path = self.directory / "quadrant.png"
        plot_quadrant(scan, path, title="trefoil")
        self.assertTrue(path.exists())
        self.assertEqual(path.read_bytes()[:4], b"\x89PNG")


if __name__ == '__main__':
    unittest.main()
