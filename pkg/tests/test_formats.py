import pytest

from tangleforge import corpus
from tangleforge.formats import (ParseError, detect_kind, format_hom, format_tuple,
                                 parse_automorphism, parse_hom, parse_tuple, parse_words)
from tangleforge.generate import random_bounding_hom
from tangleforge.words import Word, h


def test_every_fixture_round_trips(fixtures_dir):
    files = sorted(fixtures_dir.iterdir())
    assert files
    for path in files:
        text = path.read_text()
        if path.suffix == ".hom":
            assert format_hom(parse_hom(text)) == text, path.name
        elif path.suffix == ".tuple":
            assert format_tuple(parse_tuple(text)) == text, path.name


def test_fixtures_match_corpus(fixtures_dir):
    assert parse_hom((fixtures_dir / "rp2cp2.hom").read_text()) == corpus.running_example()
    assert parse_tuple((fixtures_dir / "rp2_minus.tuple").read_text()) == corpus.rp2_minus()
    assert parse_tuple((fixtures_dir / "rp2_plus.tuple").read_text()) == corpus.rp2_plus()


def test_comments_and_blank_lines():
    text = "# running example\ngenus = 0\n\nbridges = 1\np1 -> t1   # arc\np2 -> t1^-1\n"
    assert parse_hom(text) == corpus.unknot_hom()


def test_every_generator_needs_an_image():
    with pytest.raises(ParseError, match="b1"):
        parse_hom("genus = 1\nbridges = 0\na1 -> h1\n")
    phi = parse_hom("genus = 1\nbridges = 0\na1 -> h1\nb1 -> e\n")
    assert str(phi[list(phi.sig.domain_generators())[1]]) == "e"


@pytest.mark.parametrize("text, fragment", [
    ("bridges = 1\np1 -> t1\np2 -> t1^-1\n", "genus"),
    ("genus = 0\nbridges = 1\np1 -> t1\np1 -> t1\n", "second image"),
    ("genus = 0\nbridges = 1\np1 => t1\n", "line 3"),
    ("genus = 0\nbridges = 1\np1 -> x7\n", "line 3"),
    ("genus = x\nbridges = 1\n", "integer"),
])
def test_hom_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_hom(text)


def test_tuple_errors():
    good = format_tuple(corpus.unknot_pair())
    with pytest.raises(ParseError, match="flavor"):
        parse_tuple(good.replace("Alg31", "Alg42"))
    with pytest.raises(ParseError):
        parse_tuple(good.replace("[phi2]", "[phi3]"))
    with pytest.raises(ParseError, match="before"):
        parse_tuple("genus = 0\n" + good)


def test_round_trip_random_homs(rng):
    for _ in range(100):
        phi = random_bounding_hom(rng)
        assert parse_hom(format_hom(phi)) == phi


def test_automorphism_file():
    fwd, back = parse_automorphism("h1 -> h2\nh2 -> h1\n[inverse]\nh1 -> h2\nh2 -> h1\n")
    assert fwd[h(1)] == Word.parse("h2") and back[h(2)] == Word.parse("h1")
    with pytest.raises(ParseError, match="inverse"):
        parse_automorphism("h1 -> h2\n")


def test_detect_kind():
    assert detect_kind("x.hom", "") == "hom"
    assert detect_kind("x", "{}") == "json"
    assert detect_kind("x", "flavor = Alg3\n[phi1]\n") == "tuple"
    assert detect_kind("x", "genus = 1\n") == "hom"
    assert detect_kind("x", "h1 h2\n") == "words"
    assert [str(w) for w in parse_words("h1 h2\n# c\nh1^2\n")] == ["h1 h2", "h1^2"]
