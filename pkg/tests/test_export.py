import json
import math

import pytest

from core.export import (
    fmt_complex,
    fmt_real,
    fmt_zero,
    jsonable,
    render_reports,
    render_spectrum,
    render_zero_set,
    to_json,
)
from core.models import INFINITY, ZeroEntry
from core.spectral import rw_spectrum
from core.verify import verify_konno_sato
from core.zeta import qw_zero_set


class TestFormatting:
    @pytest.mark.parametrize("value, text", [
        (0.5, "0.5"),
        (-0.0, "0"),
        (1 / 3, "0.333333333333"),
        (math.inf, "inf"),
        (math.nan, "nan"),
    ])
    def test_real(self, value, text):
        assert fmt_real(value) == text

    def test_complex(self):
        assert fmt_complex(complex(0.5, -0.25)) == "0.5 - 0.25i"
        assert fmt_complex(complex(2, 0)) == "2"

    def test_zero(self):
        assert fmt_zero(ZeroEntry(INFINITY, 2)) == "1/2 + i*inf"
        assert fmt_zero(ZeroEntry(0.0, 1)) == "1/2"
        assert fmt_zero(ZeroEntry(-0.25, 1)) == "1/2 - i*0.25"

    def test_jsonable(self):
        assert jsonable(complex(1, -2)) == {"re": 1.0, "im": -2.0}
        assert jsonable(math.inf) == "inf"
        assert jsonable(INFINITY) == "inf"

    def test_strict_json(self):
        with pytest.raises(ValueError):
            to_json({"x": math.nan})


class TestRenderers:
    def test_spectrum_formats(self, c3):
        spectrum = rw_spectrum(c3)
        assert render_spectrum(spectrum, 'text').splitlines() == ["[-0.5]^2", "[1]^1"]
        assert render_spectrum(spectrum, 'csv').splitlines()[0] == "re,im,mult"
        assert json.loads(render_spectrum(spectrum, 'json'))["entries"][1] == {"re": 1.0, "im": 0.0, "mult": 1}

    def test_zero_set_json_is_strict(self, k4):
        data = json.loads(render_zero_set(qw_zero_set(k4), 'json'))
        assert data["total"] == 12
        assert {"gamma": "inf", "mult": 2} in data["rw"]
        assert data["rwc"] == [{"gamma": 0.0, "mult": 2}, {"gamma": "inf", "mult": 2}]

    def test_reports(self, c4):
        report = verify_konno_sato(c4, num_samples=2)
        text = render_reports([report], 'text')
        assert text.startswith("PASS konno-sato on C_4")
        data = json.loads(render_reports([report], 'json'))
        assert data["passed"] is True
        assert len(data["reports"][0]["samples"]) == 2
