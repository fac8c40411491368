"""Characteristic polynomials and conjugacy classes in central simple algebras over Q.

Polynomials are infix strings ("t^2+1") or ascending coefficient lists
(["1", "0", "1"]). Algebras, classes, matrices and overrides are the same
JSON-shaped dicts the ``csa`` command-line tool reads. Every function returns
plain dicts; failures raise :class:`CsaError` with ``kind`` and ``message``.
"""

from ._core import CsaError as _CoreError
from ._core import commands, format_poly, hilbert_symbol, is_irreducible, quaternion_to_csa, run, validate_csa

__all__ = [
    "CsaError",
    "capacity",
    "classes_with_charpoly",
    "commands",
    "conjugate_test",
    "division_classes",
    "embeds",
    "factor",
    "format_poly",
    "hilbert_symbol",
    "invariants_of_element",
    "is_characteristic_polynomial",
    "is_irreducible",
    "quat_charpoly",
    "quaternion_to_csa",
    "rcf_structure",
    "realizable_pair",
    "run",
    "search_realization",
    "splitting",
    "validate_csa",
]

CsaError = _CoreError


def _kind(self):
    return self.args[0] if self.args else None


def _message(self):
    return self.args[1] if len(self.args) > 1 else ""


CsaError.kind = property(_kind)
CsaError.message = property(_message)


def _doc(name, **request):
    doc, _ = run(name, {k: v for k, v in request.items() if v is not None})
    return doc


def factor(poly):
    return _doc("factor", polys=[poly])


def splitting(poly, places=None):
    return _doc("splitting", polys=[poly], places=places)


def capacity(algebra, poly, override=None):
    return _doc("capacity", algebra=algebra, polys=[poly], override=override)


def is_characteristic_polynomial(algebra, poly, override=None, explain=False):
    """Verdict with one certificate per irreducible factor.

    ``poly`` may also be ``{"factors": [...]}``, which is required over an
    abstract base.
    """
    return _doc("charpoly-check", algebra=algebra, polys=[poly], override=override, explain=explain)


def embeds(algebra, poly, override=None):
    return _doc("embed-check", algebra=algebra, polys=[poly], override=override)["answer"] == "yes"


def classes_with_charpoly(algebra, poly, override=None):
    return _doc("classes", algebra=algebra, polys=[poly], override=override)["classes"]


def rcf_structure(algebra, cls, override=None):
    return _doc("rcf", algebra=algebra, **{"class": cls}, override=override)


def realizable_pair(algebra, charpoly, minpoly, override=None):
    doc = _doc("realizable", algebra=algebra, polys=[charpoly], minpoly=minpoly, override=override)
    return doc["answer"] == "yes"


def quat_charpoly(matrix):
    return _doc("quat-charpoly", matrices=[matrix])


def invariants_of_element(matrix, allow_singular=False):
    return _doc("quat-invariants", matrices=[matrix], allow_singular=allow_singular)


def conjugate_test(first, second):
    return _doc("quat-conjugate", matrices=[first, second])["answer"] == "yes"


def search_realization(algebra, poly, height=3, trials=1000, seed=0):
    """Witness matrix document, or None. A miss proves nothing."""
    doc = _doc("quat-search", algebra=algebra, polys=[poly], height=height, trials=trials, seed=seed)
    return doc["witness"]


def division_classes(algebra, candidates, override=None):
    return _doc("division-classes", algebra=algebra, polys=list(candidates), override=override)["classes"]
