import xml.etree.ElementTree as ET

import numpy as np
import pytest

from sqfzeta.svg import Series, line_chart


def test_chart_is_valid_xml():
    x = np.linspace(0.3, 2, 50)
    svg = line_chart(
        [Series(x, np.sin(x), "a & b"), Series(x, np.cos(x))],
        title="t",
        xlabel="s",
        ylabel="v",
        hlines=((0.5, "ref"),),
    )
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert len(root.findall("{http://www.w3.org/2000/svg}polyline")) == 2


def test_log_axes_drop_nonpositive():
    svg = line_chart([Series([1, 10, 100], [0.0, 1e-3, 1e-1])], logx=True, logy=True)
    pts = ET.fromstring(svg).find("{http://www.w3.org/2000/svg}polyline").get("points").split()
    assert len(pts) == 2


def test_empty_chart_rejected():
    with pytest.raises(ValueError):
        line_chart([Series([], [])])
