import pytest

from tangleforge.corpus import identity_like, poincare, running_example
from tangleforge.surface import (FreeTargetHom, IllDefinedHom, SurfaceSignature, arc_matching,
                                 associated_closed, surface_relation_sides, verify_bounding,
                                 verify_hom)
from tangleforge.words import EMPTY, Letter, Word, a, b, p, t

W = Word.parse


def with_image(phi, gen, text):
    images = dict(phi.images)
    images[gen] = W(text)
    return FreeTargetHom(phi.sig, images)


def test_relation_sides():
    lhs, rhs = surface_relation_sides(SurfaceSignature(1, 2))
    assert (str(lhs), str(rhs)) == ("p1 p2 p3 p4", "a1 b1 a1^-1 b1^-1")
    lhs, rhs = surface_relation_sides(SurfaceSignature(0, 1))
    assert (str(lhs), rhs) == ("p1 p2", EMPTY)
    lhs, rhs = surface_relation_sides(SurfaceSignature(2, 0))
    assert (lhs, str(rhs)) == (EMPTY, "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1")


def test_signature_generators():
    sig = SurfaceSignature(1, 2)
    assert [str(g) for g in sig.domain_generators()] == ["p1", "p2", "p3", "p4", "a1", "b1"]
    assert [str(g) for g in sig.target_generators()] == ["h1", "t1", "t2"]
    assert sig.rank == 3
    with pytest.raises(ValueError):
        SurfaceSignature(-1, 0)


def test_hom_validation():
    sig = SurfaceSignature(0, 1)
    with pytest.raises(ValueError):
        FreeTargetHom(sig, {p(1): W("t1"), p(2): W("t2")})
    with pytest.raises(ValueError):
        FreeTargetHom(sig, {p(1): W("t1"), p(2): W("t1^-1"), a(1): W("h1")})


def test_verify_hom():
    phi = running_example()
    assert verify_hom(phi)
    assert not verify_hom(with_image(phi, p(4), "h1 t2 h1^-1"))
    assert verify_hom(identity_like(0, 1))


def test_running_example_report():
    rep = verify_bounding(running_example())
    assert rep.ok and rep.surjective and rep.cond1 and rep.cond2
    assert rep.f == {p(1): Letter(t(1), 1), p(2): Letter(t(2), 1),
                     p(3): Letter(t(1), -1), p(4): Letter(t(2), -1)}
    assert {str(k): str(v) for k, v in rep.conjugators.items()} == {
        "p1": "t2 h1", "p2": "e", "p3": "h1", "p4": "h1"}
    assert arc_matching(rep) == [(1, 3), (2, 4)]


def test_poincare_report():
    rep = verify_bounding(poincare())
    assert rep.ok and rep.f == {} and rep.cond2


def test_square_fails_cond2():
    phi = running_example()
    bad = with_image(phi, p(2), "t2 t2")
    # squaring one puncture image alone breaks the surface relation
    with pytest.raises(IllDefinedHom):
        verify_bounding(bad)
    sig = SurfaceSignature(0, 1)
    rep = verify_bounding(FreeTargetHom(sig, {p(1): W("t1^2"), p(2): W("t1^-2")}))
    assert not rep.cond2 and not rep.ok
    assert any("conjugate" in f for f in rep.failures)


def test_cond1_failure():
    # with t-letters deleted the handle images are trivial, so they miss h1
    sig = SurfaceSignature(1, 1)
    phi = FreeTargetHom(sig, {p(1): W("h1 t1 h1^-1"), p(2): W("h1 t1^-1 h1^-1"),
                              a(1): W("t1"), b(1): W("e")})
    rep = verify_bounding(phi)
    assert not rep.cond1


def test_associated_closed():
    closed = associated_closed(running_example())
    assert closed.sig == SurfaceSignature(1, 0)
    assert (str(closed[a(1)]), str(closed[b(1)])) == ("h1", "h1")
    assert associated_closed(poincare()) == poincare()
    assert associated_closed(identity_like(0, 2)).sig.rank == 0


def test_non_surjective():
    sig = SurfaceSignature(1, 0)
    rep = verify_bounding(FreeTargetHom(sig, {a(1): EMPTY, b(1): EMPTY}))
    assert not rep.surjective and not rep.ok
