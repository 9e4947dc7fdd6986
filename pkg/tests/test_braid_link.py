import pytest

from lmov.braid_link import (CATALOG_NAMES, BraidWord, cable, catalog, link_from_json, sublink,
                             torus)


def test_catalog_components():
    comps = {name: catalog(name).num_components for name in CATALOG_NAMES}
    assert comps == {"unknot": 1, "hopf": 2, "trefoil": 1, "figure8": 1,
                     "torus(2,5)": 1, "torus(3,3)": 3}


def test_unknown_link():
    with pytest.raises(KeyError):
        catalog("no-such-knot")


def test_linking_and_writhe():
    hopf = catalog("hopf")
    assert hopf.lk(0, 1) == 1
    assert hopf.writhes == (0, 0)
    assert catalog("trefoil").writhes == (3,)
    assert catalog("figure8").writhes == (0,)
    assert catalog("torus(3,3)").total_linking() == 3


def test_cable_doubles_strands():
    C, starts = cable(catalog("trefoil"), (2,))
    assert C.strands == 4
    assert len(C.word) == 4 * 3
    assert C.num_components == 2
    assert starts == (1, 3)


def test_sublink():
    sub = sublink(catalog("torus(3,3)"), [0, 1])
    assert sub.num_components == 2
    assert sub.total_linking() == 1


def test_json_and_hash():
    L = torus(2, 5)
    M = link_from_json(L.to_json())
    assert M.content_hash() == L.content_hash()
    assert catalog("trefoil").content_hash() != catalog("hopf").content_hash()


def test_bad_letter():
    with pytest.raises(ValueError):
        BraidWord(2, (3,))
