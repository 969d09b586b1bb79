"""Golden data access and tower definitions.

The data directory (override with the TOWERFORGE_DATA environment
variable) holds three things:

* ``conway.json``  -- the defining-polynomial table used by gf.make_field,
* ``golden/``      -- transcribed polynomials with a sha256 manifest,
* ``towers/``      -- tower definition files in the schema parsed here.

Golden files are verified against the manifest on first read, so a
corrupted or hand-edited transcription fails loudly rather than leaking
into the identity suite.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .domains import FF
from .gf import FieldElement, FieldSpec, make_field
from .poly import SparsePoly


class DataError(Exception):
    """Base class for data-directory and schema problems."""


class IntegrityError(DataError):
    """A golden file does not match its manifest entry."""


class SchemaError(DataError):
    pass


class DegreeZeroStep(SchemaError):
    pass


class NotInCatalog(DataError):
    pass


def data_dir() -> Path:
    override = os.environ.get("TOWERFORGE_DATA")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


@lru_cache(maxsize=None)
def _manifest() -> dict[str, str]:
    path = data_dir() / "golden" / "MANIFEST.sha256"
    if not path.exists():
        raise IntegrityError(f"golden data manifest missing: {path}")
    out = {}
    for line in path.read_text().splitlines():
        if not line.strip():
            continue
        digest, name = line.split()
        out[name] = digest
    return out


@lru_cache(maxsize=None)
def golden_json(name: str):
    """Load and integrity-check one golden data file."""
    path = data_dir() / "golden" / name
    if not path.exists():
        raise DataError(f"missing golden file {name}")
    raw = path.read_bytes()
    want = _manifest().get(name)
    if want is None:
        raise IntegrityError(f"{name} has no manifest entry")
    got = hashlib.sha256(raw).hexdigest()
    if got != want:
        raise IntegrityError(f"{name}: sha256 {got} != manifest {want}")
    return json.loads(raw)


def golden_poly(name: str) -> SparsePoly:
    return SparsePoly.from_json(golden_json(name))


def golden_poly_list(name: str) -> list[SparsePoly]:
    return [SparsePoly.from_json(d) for d in golden_json(name)]


def golden_pair(name: str) -> tuple[SparsePoly, SparsePoly]:
    d = golden_json(name)
    return SparsePoly.from_json(d["num"]), SparsePoly.from_json(d["den"])


def golden_jparam(example: str) -> dict[str, SparsePoly]:
    d = golden_json(f"jparam_{example}.json")
    return {k: SparsePoly.from_json(v) for k, v in d.items()}


#: catalog keys for the three worked levels
EXAMPLES = ("T", "T2T1", "T2T")

#: level polynomials N, as coefficient lists over GF(2), low-to-high in T
LEVEL_POLYS = {
    "T": (0, 1),
    "T2T1": (1, 1, 1),
    "T2T": (0, 1, 1),
}

#: Y-degrees of the modular polynomials, per the degree formula
PHI_DEGREES = {"T": 3, "T2T1": 5, "T2T": 9}

#: degree of the depth-one step polynomial in Y (q^deg of the level)
STEP_DEGREES = {"T": 2, "T2T1": 4, "T2T": 4}


# ---------------------------------------------------------------------------
# tower definitions


@dataclass(frozen=True)
class Depth1Step:
    f: SparsePoly  # f(X, Y): X previous value, Y next


@dataclass(frozen=True)
class Depth2Step:
    first: SparsePoly  # Phi(X, Y)
    later: SparsePoly  # Psi(X, Y, Z): X two back, Y previous, Z next


@dataclass(frozen=True)
class TwistedStep:
    phi: SparsePoly  # cubic step in (X, Y) over the constant field
    twist_power: int  # coefficients are raised to this power per level
    backtrack: tuple[FieldElement, FieldElement, FieldElement]  # lead, mul, const


@dataclass(frozen=True)
class TowerDef:
    id: str
    field: FieldSpec
    kind: str  # "depth1" | "depth2" | "twisted-depth2"
    vars: tuple[str, ...]
    step: object  # one of the step dataclasses above
    notes: str = ""
    genus_recipe: dict | None = None

    def step_degree(self, level: int) -> int:
        """Generic degree of the level-th fiber in its step variable."""
        if self.kind == "depth1":
            return self.step.f.degree("Y")
        if self.kind == "depth2":
            return self.step.first.degree("Y") if level == 1 else self.step.later.degree("Z")
        if self.kind == "twisted-depth2":
            d = self.step.phi.degree("Y")
            return d if level == 1 else d - 1
        raise SchemaError(f"unknown tower kind {self.kind}")


def parse_tower_file(path: str | Path) -> TowerDef:
    """Parse and validate a tower definition file."""
    path = Path(path)
    if not path.exists():
        raise DataError(f"no such tower file: {path}")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: not valid JSON ({e})") from None
    return tower_from_json(data)


def tower_from_json(data: dict) -> TowerDef:
    for key in ("id", "field", "kind", "vars"):
        if key not in data:
            raise SchemaError(f"tower definition missing {key!r}")
    fd = data["field"]
    fld = make_field(fd["p"], fd["k"], fd.get("poly"))
    dom = FF(fld)
    kind = data["kind"]
    notes = data.get("notes", "")

    def load_poly(key: str) -> SparsePoly:
        if key not in data:
            raise SchemaError(f"tower definition missing {key!r}")
        p = SparsePoly.from_json(data[key])
        if p.domain != dom:
            raise SchemaError(f"{key} is defined over {p.domain!r}, not the tower field")
        return p

    if kind == "depth1":
        f = load_poly("step")
        if f.degree("Y") < 1:
            raise DegreeZeroStep("depth-1 step has degree 0 in the fiber variable Y")
        step = Depth1Step(f)
    elif kind == "depth2":
        first = load_poly("first_step")
        later = load_poly("later_step")
        if first.degree("Y") < 1 or later.degree("Z") < 1:
            raise DegreeZeroStep("depth-2 step has degree 0 in its fiber variable")
        step = Depth2Step(first, later)
    elif kind == "twisted-depth2":
        phi = load_poly("phi")
        if phi.degree("Y") < 2:
            raise DegreeZeroStep("twisted step needs fiber degree at least 2")
        bt = data.get("backtrack")
        if not bt:
            raise SchemaError("twisted-depth2 tower needs a backtrack factor")
        back = tuple(fld.element(bt[k]) for k in ("lead", "mul", "const"))
        step = TwistedStep(phi, int(data.get("twist_power", 8)), back)
    else:
        raise SchemaError(f"unknown tower kind {kind!r}")

    return TowerDef(
        id=data["id"],
        field=fld,
        kind=kind,
        vars=tuple(data["vars"]),
        step=step,
        notes=notes,
        genus_recipe=data.get("genus_recipe"),
    )


@lru_cache(maxsize=1)
def tower_ids() -> tuple[str, ...]:
    tdir = data_dir() / "towers"
    return tuple(sorted(p.stem for p in tdir.glob("*.json")))


@lru_cache(maxsize=None)
def get_tower(tower_id: str) -> TowerDef:
    tdir = data_dir() / "towers"
    path = tdir / f"{tower_id}.json"
    if not path.exists():
        raise NotInCatalog(f"no catalog tower {tower_id!r}; have {', '.join(tower_ids())}")
    t = parse_tower_file(path)
    if t.id != tower_id:
        raise SchemaError(f"tower file {path} declares id {t.id!r}")
    return t


def resolve_tower(spec: str) -> TowerDef:
    """Resolve a catalog id or a definition-file path."""
    if spec.endswith(".json") or "/" in spec or os.sep in spec:
        return parse_tower_file(spec)
    return get_tower(spec)
