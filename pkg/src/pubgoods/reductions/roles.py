from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union

Param = Union[int, str]

ROLE_KINDS = (
    "Literal",
    "Inner",
    "Peripheral",
    "Transfer",
    "Copy",
    "Negation",
    "Antenna",
    "NgBridge",
    "NgClique",
    "NgCycle",
    "FgBridge",
    "FgLayer2",
    "FgLayer3",
    "Replica",
    "Original",
)


@dataclass(frozen=True)
class Role:
    """What a constructed node is for, e.g. ``Role.of("Literal", clause=0, position=2, ...)``."""

    kind: str
    params: Tuple[Tuple[str, Param], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ROLE_KINDS:
            raise ValueError(f"unknown role {self.kind!r}")

    @classmethod
    def of(cls, kind: str, **params: Param) -> "Role":
        return cls(kind, tuple(params.items()))

    def __getitem__(self, key: str) -> Param:
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def get(self, key: str, default=None):
        try:
            return self[key]
        except KeyError:
            return default


@dataclass(frozen=True)
class ReductionMap:
    """Role of every node of a constructed graph, indexed by node id."""

    roles: Tuple[Role, ...]

    def __len__(self) -> int:
        return len(self.roles)

    def __getitem__(self, node: int) -> Role:
        return self.roles[node]

    def __iter__(self) -> Iterator[Role]:
        return iter(self.roles)

    def nodes(self, kind: str, **match: Param) -> List[int]:
        return [
            i
            for i, r in enumerate(self.roles)
            if r.kind == kind and all(r.get(k) == v for k, v in match.items())
        ]

    def literal_pairs(self) -> List[Tuple[int, int]]:
        """``(literal node, paired peripheral node)`` for every clause position."""
        periph = {(r["clause"], r["position"]): i for i, r in enumerate(self.roles) if r.kind == "Peripheral"}
        return [
            (i, periph[(r["clause"], r["position"])])
            for i, r in enumerate(self.roles)
            if r.kind == "Literal"
        ]
