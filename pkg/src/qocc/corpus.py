"""Document counting: three-term presence cells, marginals, count ratios.

All counting is presence-based: a word occurs in a document if it appears at
least once, term frequency is ignored.  Marginal counts are always derived
from the eight disjoint presence/absence cells of a three-word search, never
queried separately, so they are consistent by construction.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from .errors import InconsistentRatios, InvalidCounts, ZeroDenominator

_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)


@dataclass(frozen=True)
class TokenizerConfig:
    """Unicode lowercasing, split on non-letters; optional stemmer hook."""

    stemmer: Callable[[str], str] | None = None


DEFAULT_TOKENIZER = TokenizerConfig()


def tokenize(raw_text: str, config: TokenizerConfig = DEFAULT_TOKENIZER) -> list[str]:
    """Lowercase word tokens in order, duplicates kept, '' gives []."""
    tokens = _WORD_RE.findall(raw_text.lower())
    if config.stemmer is not None:
        tokens = [config.stemmer(tok) for tok in tokens]
    return tokens


@dataclass(frozen=True)
class Document:
    id: str
    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.id:
            raise InvalidCounts("document id must be nonempty")
        object.__setattr__(self, "tokens", tuple(self.tokens))


def document_from_text(doc_id: str, text: str, config: TokenizerConfig = DEFAULT_TOKENIZER) -> Document:
    return Document(doc_id, tuple(tokenize(text, config)))


def load_corpus(path: str | Path, config: TokenizerConfig = DEFAULT_TOKENIZER) -> list[Document]:
    """Read a corpus: a directory of text files, or a JSON-lines file.

    Directory: every regular file is one document, id = file name.
    JSON lines: one {"id": ..., "text": ...} object per line.
    """
    p = Path(path)
    docs: list[Document] = []
    if p.is_dir():
        for child in sorted(p.iterdir()):
            if child.is_file():
                docs.append(document_from_text(child.name, child.read_text(encoding="utf-8"), config))
        return docs
    with p.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            docs.append(document_from_text(str(record["id"]), str(record["text"]), config))
    return docs


@dataclass(frozen=True)
class ThreeTermCounts:
    """The eight disjoint cells of a three-word presence pattern.

    Field ``n<a><b><x>`` counts documents where digit 1 means the word is
    present and 0 absent, in the order (a, b, x): n101 is "a and x but not b".
    """

    n111: int = 0
    n110: int = 0
    n101: int = 0
    n100: int = 0
    n011: int = 0
    n010: int = 0
    n001: int = 0
    n000: int = 0

    def __post_init__(self) -> None:
        for name, value in self.as_dict().items():
            if value < 0:
                raise InvalidCounts(f"cell {name} is negative: {value}")

    def as_dict(self) -> dict[str, int]:
        return {
            "n111": self.n111, "n110": self.n110, "n101": self.n101, "n100": self.n100,
            "n011": self.n011, "n010": self.n010, "n001": self.n001, "n000": self.n000,
        }

    @property
    def total(self) -> int:
        return sum(self.as_dict().values())

    def __add__(self, other: "ThreeTermCounts") -> "ThreeTermCounts":
        mine, theirs = self.as_dict(), other.as_dict()
        return ThreeTermCounts(**{k: mine[k] + theirs[k] for k in mine})


def count_corpus(documents: Iterable[Document], a: str, b: str, x: str) -> ThreeTermCounts:
    """Tally each document into exactly one of the eight presence cells."""
    cells = {key: 0 for key in ("n111", "n110", "n101", "n100", "n011", "n010", "n001", "n000")}
    for doc in documents:
        present = set(doc.tokens)
        key = f"n{int(a in present)}{int(b in present)}{int(x in present)}"
        cells[key] += 1
    return ThreeTermCounts(**cells)


@dataclass(frozen=True)
class CountTable:
    """Marginal page counts for words a, b, x and their co-occurrences.

    Structural invariants enforced here are the ones every formula in the
    package needs: nonnegative cells, n_abx <= n_ab, n_ax <= n_a, n_bx <= n_b,
    n_ab <= min(n_a, n_b).  Cross-marginal consistency (for example
    n_abx <= n_ax) is reported by ``classically_consistent`` instead of
    enforced, because externally measured search counts routinely violate it.
    """

    n_a: int
    n_b: int
    n_ab: int
    n_ax: int
    n_bx: int
    n_abx: int

    def __post_init__(self) -> None:
        for name, value in self.as_dict().items():
            if not isinstance(value, int):
                raise InvalidCounts(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise InvalidCounts(f"{name} is negative: {value}")
        if self.n_ab > min(self.n_a, self.n_b):
            raise InvalidCounts(f"n_ab={self.n_ab} exceeds min(n_a, n_b)")
        if self.n_ax > self.n_a:
            raise InvalidCounts(f"n_ax={self.n_ax} exceeds n_a={self.n_a}")
        if self.n_bx > self.n_b:
            raise InvalidCounts(f"n_bx={self.n_bx} exceeds n_b={self.n_b}")
        if self.n_abx > self.n_ab:
            raise InvalidCounts(f"n_abx={self.n_abx} exceeds n_ab={self.n_ab}")

    @property
    def n_ax_prime(self) -> int:
        return self.n_a - self.n_ax

    @property
    def n_bx_prime(self) -> int:
        return self.n_b - self.n_bx

    @property
    def n_abx_prime(self) -> int:
        return self.n_ab - self.n_abx

    @property
    def classically_consistent(self) -> bool:
        """True when some classical document collection could yield these counts."""
        upper = self.n_abx <= min(self.n_ax, self.n_bx)
        lower = self.n_abx >= max(0, self.n_ab + self.n_ax - self.n_a, self.n_ab + self.n_bx - self.n_b)
        return upper and lower

    def as_dict(self) -> dict[str, int]:
        return {
            "n_a": self.n_a, "n_b": self.n_b, "n_ab": self.n_ab,
            "n_ax": self.n_ax, "n_bx": self.n_bx, "n_abx": self.n_abx,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CountTable":
        try:
            values = {key: data[key] for key in ("n_a", "n_b", "n_ab", "n_ax", "n_bx", "n_abx")}
        except KeyError as exc:
            raise InvalidCounts(f"count-table JSON is missing key {exc.args[0]!r}") from exc
        coerced = {}
        for key, value in values.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidCounts(f"{key} must be a number, got {value!r}")
            if isinstance(value, float):
                if not value.is_integer():
                    raise InvalidCounts(f"{key} must be integral, got {value!r}")
                value = int(value)
            coerced[key] = value
        return cls(**coerced)


def marginals(counts: ThreeTermCounts) -> CountTable:
    """Sum the eight cells into the six marginals used downstream."""
    return CountTable(
        n_a=counts.n111 + counts.n110 + counts.n101 + counts.n100,
        n_b=counts.n111 + counts.n110 + counts.n011 + counts.n010,
        n_ab=counts.n111 + counts.n110,
        n_ax=counts.n111 + counts.n101,
        n_bx=counts.n111 + counts.n011,
        n_abx=counts.n111,
    )


@dataclass(frozen=True)
class ProbabilityTriple:
    """mu_a = n_ax/n_a, mu_b = n_bx/n_b, and the observed n_abx/n_ab."""

    mu_a: float
    mu_b: float
    mu_ab_observed: float


def probabilities(table: CountTable) -> ProbabilityTriple:
    """Occurrence ratios of x within the a-pages, b-pages, and ab-pages."""
    for name, denom in (("n_a", table.n_a), ("n_b", table.n_b), ("n_ab", table.n_ab)):
        if denom == 0:
            raise ZeroDenominator(f"marginal {name} is zero")
    return ProbabilityTriple(
        mu_a=table.n_ax / table.n_a,
        mu_b=table.n_bx / table.n_b,
        mu_ab_observed=table.n_abx / table.n_ab,
    )


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def table_from_ratios(
    n_a: int,
    n_b: int,
    n_ab: int,
    mu_a: float,
    mu_b: float,
    mu_ab: float,
) -> CountTable:
    """Reconstruct a CountTable from totals and occurrence ratios.

    Products are rounded half-up; ratios reported at three significant
    figures therefore round-trip to the same figures.
    """
    for name, total in (("n_a", n_a), ("n_b", n_b), ("n_ab", n_ab)):
        if total <= 0:
            raise InconsistentRatios(f"total {name} must be positive, got {total}")
    for name, ratio in (("mu_a", mu_a), ("mu_b", mu_b), ("mu_ab", mu_ab)):
        if not 0.0 <= ratio <= 1.0:
            raise InconsistentRatios(f"ratio {name}={ratio!r} is outside [0, 1]")
    try:
        return CountTable(
            n_a=n_a,
            n_b=n_b,
            n_ab=n_ab,
            n_ax=_round_half_up(mu_a * n_a),
            n_bx=_round_half_up(mu_b * n_b),
            n_abx=_round_half_up(mu_ab * n_ab),
        )
    except InvalidCounts as exc:
        raise InconsistentRatios(str(exc)) from exc
