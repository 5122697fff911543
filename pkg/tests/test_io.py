import json
from fractions import Fraction

import pytest

from pentagram.inscribed import InscribedData, PCoordinates, random_inscribed
from pentagram.invariants import invariant_set, trace_invariants
from pentagram.io import (
    dumps,
    format_rational,
    inscribed_from_json,
    inscribed_to_json,
    invariant_report,
    parse_rational,
    polygon_from_json,
    polygon_to_json,
)
from pentagram.polygon import corner_invariants, random_twisted


def test_rational_strings():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(5) == "5"
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational(7) == 7
    for bad in (True, 1.5, None):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_polygon_round_trip():
    for closed in (False, True):
        P = random_twisted(7, 3, closed=closed)
        data = json.loads(dumps(polygon_to_json(P)))
        assert ("monodromy" in data) is not closed
        assert polygon_from_json(data) == P


def test_polygon_validation():
    with pytest.raises(ValueError):
        polygon_from_json({"n": 5, "vertices": [[1, 0, 0]] * 4})
    with pytest.raises(ValueError):
        polygon_from_json({"vertices": [[1, 0]] * 5})
    with pytest.raises(ValueError):
        polygon_from_json([])


def test_inscribed_round_trip_and_p_form():
    D = random_inscribed(6, 2)
    assert inscribed_from_json(json.loads(dumps(inscribed_to_json(D)))) == D
    p = inscribed_from_json({"n": 5, "p": ["1/2", "2", "-1", "3/4", "5"]})
    assert isinstance(p, PCoordinates) and p.at(1) == Fraction(1, 2)
    plain = inscribed_from_json({"params": ["0", "1", "2", "3", "4"]})
    assert isinstance(plain, InscribedData)
    with pytest.raises(ValueError):
        inscribed_from_json({"n": 3, "p": ["2", "3"]})
    with pytest.raises(ValueError):
        inscribed_from_json({"q": []})


def test_report_shape():
    P = random_twisted(6, 0)
    report = invariant_report(invariant_set(corner_invariants(P)), trace_invariants(P))
    assert set(report) == {"n", "O", "E", "On", "En", "omega1", "omega2", "tilde1", "tilde2"}
    assert set(report["O"]) == {"1", "2", "3"}
    assert all(isinstance(v, str) for v in report["O"].values())


def test_dumps_is_deterministic():
    obj = {"b": Fraction(1, 3), "a": [Fraction(2)]}
    assert dumps(obj) == dumps(dict(reversed(list(obj.items()))))
    assert json.loads(dumps(obj)) == {"a": ["2"], "b": "1/3"}
