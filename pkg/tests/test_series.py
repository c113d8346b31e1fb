from dataclasses import replace

from siegel2.series import ALL_SERIES, SeriesSpec, expand, verify_tables


def _spec(label):
    return next(s for s in ALL_SERIES if s.label == label)


def test_expand_geometric():
    spec = SeriesSpec(
        label="t", family="M", partition=None, num=(1,),
        den=((1, 0, -1),), parity="all",
    )
    assert expand(spec, 10) == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_expand_known_dimension_coefficients():
    dim_all = _spec("M/dim")
    coeffs = expand(dim_all, 12)
    assert coeffs[0] == 1
    assert coeffs[4] == 15
    assert coeffs[5] == 1
    assert coeffs[10] == 121
    assert coeffs[11] == 35
    odd = _spec("S_odd/dim")
    assert expand(odd, 11)[11] == 35
    assert expand(odd, 9)[9] == 15


def test_catalogue_shape():
    labels = [s.label for s in ALL_SERIES]
    assert len(labels) == len(set(labels)) == 80
    for spec in ALL_SERIES:
        assert spec.parity in ("all", "even", "odd")


def test_verify_tables_passes():
    report = verify_tables(40)
    assert report.ok
    assert not report.failures
    assert all(r.checked > 0 for r in report.results)


def test_verify_detects_corruption(monkeypatch):
    import siegel2.series as series_mod

    good = _spec("M/dim")
    bad = replace(good, num=tuple([good.num[0] + 1] + list(good.num[1:])))
    corrupted = tuple(bad if s.label == "M/dim" else s for s in ALL_SERIES)
    monkeypatch.setattr(series_mod, "ALL_SERIES", corrupted)
    report = series_mod.verify_tables(10)
    assert not report.ok
    (failure,) = report.failures
    assert failure.label == "M/dim"
    assert failure.first_mismatch[0] == 0
