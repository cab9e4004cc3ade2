"""JSON documents for models, forms and command results.

Every document carries ``field`` (a domain descriptor) and ``kind``.
Scalars are always strings: rationals as ``"p/q"``, elements of Q(zeta5)
as ``"[c0, c1, c2, c3]"``, so big values survive exactly.
"""

from __future__ import annotations

import json

from .algebra import QQ, Domain, Poly, domain_from_descriptor, ring
from .alphabets import PAIRS, W
from .curve import CurvePoint
from .models import GenusOneModel, QuadricSystem


class FormatError(ValueError):
    pass


def _field(doc: dict) -> Domain:
    try:
        return domain_from_descriptor(doc["field"])
    except (KeyError, TypeError) as e:
        raise FormatError("document has no valid 'field'") from e


def _expect(doc: dict, kind: str):
    if not isinstance(doc, dict) or doc.get("kind") != kind:
        raise FormatError(f"expected a {kind!r} document")


def scalar_str(c, domain: Domain) -> str:
    return domain.to_str(domain.coerce(c))


# -- models -------------------------------------------------------------------
def model_to_doc(m: GenusOneModel) -> dict:
    """Numeric models only: entries are the coefficient 5-vectors in w."""
    if not m.is_numeric():
        raise FormatError("only models with numeric coefficients can be serialised")
    dom = m.domain
    entries = []
    for i, j in PAIRS:
        e = m.entry(i, j)
        entries.append([scalar_str(e.coeff({w: 1}), dom) for w in W])
    return {"field": dom.descriptor(), "kind": "model", "entries": entries}


def model_from_doc(doc: dict) -> GenusOneModel:
    _expect(doc, "model")
    dom = _field(doc)
    rows = doc.get("entries")
    if not isinstance(rows, list) or len(rows) != 10 or any(len(r) != 5 for r in rows):
        raise FormatError("a model has 10 entries of 5 coefficients")
    R = ring(W, dom)
    gens = R.gens(*W)
    entries = {}
    for (i, j), row in zip(PAIRS, rows):
        e = R.zero()
        for g, c in zip(gens, row):
            if not isinstance(c, str):
                raise FormatError("coefficients must be strings")
            e = e + g * dom.from_str(c)
        entries[(i, j)] = e
    return GenusOneModel(R, entries)


# -- forms --------------------------------------------------------------------
def _terms(f: Poly, dom: Domain) -> list:
    return [[list(e), scalar_str(c, dom)] for e, c in sorted(f.term_list(), reverse=True)]


def forms_to_doc(forms: dict, meta: dict | None = None) -> dict:
    """Named polynomials over one ring."""
    if not forms:
        raise FormatError("no forms given")
    rings = {f.ring for f in forms.values()}
    if len(rings) != 1:
        from .algebra import join_rings

        R = join_rings(*rings)
        forms = {k: f.embed(R) for k, f in forms.items()}
    R = next(iter(forms.values())).ring
    doc = {
        "field": R.domain.descriptor(),
        "kind": "form",
        "variables": list(R.names),
        "forms": {k: _terms(f, R.domain) for k, f in forms.items()},
    }
    if meta:
        doc["meta"] = meta
    return doc


def forms_from_doc(doc: dict) -> dict:
    _expect(doc, "form")
    dom = _field(doc)
    names = doc.get("variables")
    if not isinstance(names, list):
        raise FormatError("form document needs 'variables'")
    R = ring(tuple(names), dom)
    out = {}
    for k, terms in doc.get("forms", {}).items():
        acc = {}
        for exps, c in terms:
            if len(exps) != len(names):
                raise FormatError("exponent vector length does not match variables")
            acc[tuple(int(e) for e in exps)] = dom.from_str(c)
        out[k] = R.from_terms(acc.items())
    return out


def quadrics_to_doc(q: QuadricSystem) -> dict:
    return forms_to_doc({f"p{i}": f for i, f in enumerate(q)})


# -- results --------------------------------------------------------------------
def point_to_doc(P: CurvePoint, domain: Domain, extra: dict | None = None) -> dict:
    doc = {"field": domain.descriptor(), "kind": "point"}
    if P.infinity:
        doc["point"] = "infinity"
    else:
        doc["point"] = [scalar_str(P.x, domain), scalar_str(P.y, domain)]
    if extra:
        doc.update(extra)
    return doc


def record_doc(kind: str, values: dict, domain: Domain = QQ, extra: dict | None = None) -> dict:
    """A flat map of exact scalars (None stays null)."""
    doc = {"field": domain.descriptor(), "kind": kind}
    for k, v in values.items():
        doc[k] = None if v is None else scalar_str(v, domain)
    if extra:
        doc.update(extra)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=False)


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not JSON: {e}") from e
