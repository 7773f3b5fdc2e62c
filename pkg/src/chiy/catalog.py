"""Chern data for projective spaces, hypersurfaces and products, plus the
JSON manifold-spec format.

JSON specs (keys are exact)::

    {"kind": "projective", "n": 2}
    {"kind": "hypersurface", "n": 2, "k": 4}
    {"kind": "product", "a": <spec>, "b": <spec>}
    {"kind": "explicit", "dim": 2, "chern": {"1,1": 0, "2": 24}, "name": "K3"}
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any, Optional

from .genus import ChernData, HodgeTable
from .symfunc import Partition, partitions


class SpecError(ValueError):
    """Invalid manifold spec; ``location`` names the offending field."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


@dataclass(frozen=True)
class ManifoldSpec:
    """One of ``projective``, ``hypersurface``, ``product`` or ``explicit``.

    ``args`` holds ``(n,)``, ``(n, k)``, ``(spec_a, spec_b)`` or ``(ChernData,)``.
    """

    kind: str
    args: tuple
    name: str = ""

    @property
    def label(self) -> str:
        return self.name or builtin_id(self)


def _evaluate(coeffs: list[int], lam: Partition, volume: int) -> int:
    value = volume
    for part in lam:
        value *= coeffs[part]
    return value


def _chern_data_from_total_class(n: int, coeffs: list[int], volume: int, name: str) -> ChernData:
    # total Chern class sum_i coeffs[i] h^i with int h^n = volume
    return ChernData(n, {lam: _evaluate(coeffs, lam, volume) for lam in partitions(n)}, name)


def projective_space(n: int) -> ChernData:
    """``CP^n``: total class ``(1+h)^{n+1}``, ``int h^n = 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _chern_data_from_total_class(n, [comb(n + 1, i) for i in range(n + 1)], 1, f"cp:{n}")


def hypersurface_total_class(n: int, k: int) -> list[int]:
    """Coefficients of ``(1+h)^{n+2} / (1+kh)`` through ``h^n``, by long division."""
    numer = [comb(n + 2, i) for i in range(n + 1)]
    # divide by (1 + k h): q_i = numer_i - k q_{i-1}
    quot = []
    for i in range(n + 1):
        quot.append(numer[i] - (k * quot[i - 1] if i else 0))
    return quot


def hypersurface(n: int, k: int) -> ChernData:
    """Degree-``k`` hypersurface of dimension ``n`` in ``CP^{n+1}``; ``int h^n = k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("degree k must be at least 1")
    return _chern_data_from_total_class(n, hypersurface_total_class(n, k), k, f"hyp:{n}:{k}")


def product(a: ChernData, b: ChernData) -> ChernData:
    """Chern numbers of ``A x B`` from the Whitney formula.

    ``c_k(A x B) = sum_{i+j=k} c_i(A) c_j(B)``; monomials are expanded by
    bidegree and only terms of A-weight ``dim A`` and B-weight ``dim B``
    survive integration.
    """
    da, db = a.dim, b.dim
    d = da + db
    numbers = {}
    for lam in partitions(d):
        # (A-partition, B-partition) -> multiplicity
        terms = {(Partition(), Partition()): 1}
        for part in lam:
            nxt: dict = {}
            for (pa, pb), mult in terms.items():
                for i in range(part + 1):
                    j = part - i
                    if i > da or j > db:
                        continue
                    qa = pa + ((i,) if i else ())
                    qb = pb + ((j,) if j else ())
                    if qa.weight > da or qb.weight > db:
                        continue
                    nxt[qa, qb] = nxt.get((qa, qb), 0) + mult
            terms = nxt
        numbers[lam] = sum(
            mult * a[pa] * b[pb]
            for (pa, pb), mult in terms.items()
            if pa.weight == da and pb.weight == db
        )
    name = f"{a.name}x{b.name}" if a.name and b.name else ""
    return ChernData(d, numbers, name)


# --- Hodge numbers for the classical members of the catalog ----------------------

def _hodge_hypersurface(n: int, k: int) -> Optional[HodgeTable]:
    if k == 1:
        return HodgeTable(n, {(i, i): 1 for i in range(n + 1)})
    if n == 0:
        return HodgeTable(0, {(0, 0): k})
    if n == 1:
        g = (k - 1) * (k - 2) // 2
        return HodgeTable(1, {(0, 0): 1, (1, 1): 1, (1, 0): g, (0, 1): g})
    if k == 2:
        b = {(i, i): 1 for i in range(n + 1)}
        if n % 2 == 0:
            b[n // 2, n // 2] = 2
        return HodgeTable(n, b)
    if n == 2:
        pg = comb(k - 1, 3)
        h11 = (2 * k**3 - 6 * k**2 + 7 * k) // 3
        return HodgeTable(2, {(0, 0): 1, (2, 2): 1, (2, 0): pg, (0, 2): pg, (1, 1): h11})
    return None


def _hodge_product(a: HodgeTable, b: HodgeTable) -> HodgeTable:
    out: dict = {}
    for (i, j), x in a.b.items():
        for (k, l), y in b.b.items():
            out[i + k, j + l] = out.get((i + k, j + l), 0) + x * y
    return HodgeTable(a.dim + b.dim, out)


def hodge_table(spec: ManifoldSpec) -> Optional[HodgeTable]:
    """Known Hodge numbers for ``spec``, or ``None`` if the catalog has none.

    Covers projective spaces, curves, quadrics, surfaces in ``CP^3`` and
    products of those (Kunneth).
    """
    if spec.kind == "projective":
        (n,) = spec.args
        return HodgeTable(n, {(i, i): 1 for i in range(n + 1)})
    if spec.kind == "hypersurface":
        return _hodge_hypersurface(*spec.args)
    if spec.kind == "product":
        ha, hb = (hodge_table(s) for s in spec.args)
        if ha is None or hb is None:
            return None
        return _hodge_product(ha, hb)
    return None


def chern_data(spec: ManifoldSpec) -> ChernData:
    if spec.kind == "projective":
        data = projective_space(*spec.args)
    elif spec.kind == "hypersurface":
        data = hypersurface(*spec.args)
    elif spec.kind == "product":
        data = product(*(chern_data(s) for s in spec.args))
    elif spec.kind == "explicit":
        (data,) = spec.args
    else:
        raise SpecError("kind", f"unknown kind {spec.kind!r}")
    if spec.name and data.name != spec.name:
        data = ChernData(data.dim, data.chern_numbers, spec.name)
    return data


# --- spec parsing ----------------------------------------------------------------

def _int_field(doc: dict, key: str, where: str, minimum: int) -> int:
    if key not in doc:
        raise SpecError(f"{where}.{key}", "missing field")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"{where}.{key}", f"expected an integer, got {value!r}")
    if value < minimum:
        raise SpecError(f"{where}.{key}", f"must be >= {minimum}, got {value}")
    return value


def parse_spec(doc: Any, where: str = "$") -> ManifoldSpec:
    """Validate a decoded JSON document and turn it into a :class:`ManifoldSpec`.

    Errors are :class:`SpecError` whose ``location`` is a JSON path such as
    ``$.a.chern["3"]``.
    """
    if not isinstance(doc, dict):
        raise SpecError(where, "expected a JSON object")
    kind = doc.get("kind")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SpecError(f"{where}.name", "expected a string")

    if kind == "projective":
        return ManifoldSpec("projective", (_int_field(doc, "n", where, 0),), name)
    if kind == "hypersurface":
        n = _int_field(doc, "n", where, 0)
        k = _int_field(doc, "k", where, 1)
        return ManifoldSpec("hypersurface", (n, k), name)
    if kind == "product":
        parts = []
        for key in ("a", "b"):
            if key not in doc:
                raise SpecError(f"{where}.{key}", "missing field")
            parts.append(parse_spec(doc[key], f"{where}.{key}"))
        return ManifoldSpec("product", tuple(parts), name)
    if kind == "explicit":
        dim = _int_field(doc, "dim", where, 0)
        chern = doc.get("chern")
        if not isinstance(chern, dict):
            raise SpecError(f"{where}.chern", "expected an object of partition -> integer")
        numbers = {}
        for key, value in chern.items():
            loc = f"{where}.chern[{key!r}]"
            try:
                lam = Partition.from_key(key)
            except ValueError as exc:
                raise SpecError(loc, str(exc)) from None
            if lam.weight != dim:
                raise SpecError(loc, f"partition weight {lam.weight} != dim {dim}")
            if isinstance(value, bool) or not isinstance(value, int):
                raise SpecError(loc, f"expected an integer, got {value!r}")
            if lam in numbers:
                raise SpecError(loc, "duplicate partition")
            numbers[lam] = value
        return ManifoldSpec("explicit", (ChernData(dim, numbers, name),), name)
    if kind is None:
        raise SpecError(f"{where}.kind", "missing field")
    raise SpecError(f"{where}.kind", f"unknown kind {kind!r}")


def spec_to_json(spec: ManifoldSpec) -> dict:
    if spec.kind == "projective":
        doc = {"kind": "projective", "n": spec.args[0]}
    elif spec.kind == "hypersurface":
        doc = {"kind": "hypersurface", "n": spec.args[0], "k": spec.args[1]}
    elif spec.kind == "product":
        doc = {"kind": "product", "a": spec_to_json(spec.args[0]), "b": spec_to_json(spec.args[1])}
    else:
        data = spec.args[0]
        doc = {
            "kind": "explicit",
            "dim": data.dim,
            "chern": {lam.to_key(): v for lam, v in data.chern_numbers.items()},
        }
    if spec.name:
        doc["name"] = spec.name
    return doc


# --- builtin ids: cp:<n>, hyp:<n>:<k>, prod:<id>:<id> -------------------------------

def parse_builtin(text: str) -> ManifoldSpec:
    """Parse a builtin id such as ``prod:cp:1:hyp:2:4``."""
    tokens = text.strip().split(":")
    pos = 0

    def number(minimum: int) -> int:
        nonlocal pos
        if pos >= len(tokens):
            raise SpecError("manifold", f"truncated id {text!r}")
        tok = tokens[pos]
        pos += 1
        try:
            value = int(tok)
        except ValueError:
            raise SpecError("manifold", f"expected an integer, got {tok!r} in {text!r}") from None
        if value < minimum:
            raise SpecError("manifold", f"{value} must be >= {minimum} in {text!r}")
        return value

    def node() -> ManifoldSpec:
        nonlocal pos
        if pos >= len(tokens):
            raise SpecError("manifold", f"truncated id {text!r}")
        head = tokens[pos]
        pos += 1
        if head == "cp":
            return ManifoldSpec("projective", (number(0),))
        if head == "hyp":
            n = number(0)
            return ManifoldSpec("hypersurface", (n, number(1)))
        if head == "prod":
            a = node()
            return ManifoldSpec("product", (a, node()))
        raise SpecError("manifold", f"unknown builtin {head!r} in {text!r}")

    spec = node()
    if pos != len(tokens):
        raise SpecError("manifold", f"trailing tokens in {text!r}")
    return spec


def builtin_id(spec: ManifoldSpec) -> str:
    if spec.kind == "projective":
        return f"cp:{spec.args[0]}"
    if spec.kind == "hypersurface":
        return f"hyp:{spec.args[0]}:{spec.args[1]}"
    if spec.kind == "product":
        return f"prod:{builtin_id(spec.args[0])}:{builtin_id(spec.args[1])}"
    return spec.name or "explicit"
