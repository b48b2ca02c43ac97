from __future__ import annotations

MAIN_VARIABLE = "x"


class VarTableMismatch(ValueError):
    """Operands live over different variable tables."""


class VarTable:
    """Ordered, immutable list of variable names.

    The main variable ``x`` always sits at index 0; every other name is a
    parameter.  Variable order drives the graded-lexicographic monomial
    order (earlier names are larger).
    """

    __slots__ = ("names", "_index")

    def __init__(self, names=()):
        names = tuple(names)
        if MAIN_VARIABLE not in names:
            names = (MAIN_VARIABLE,) + names
        if names[0] != MAIN_VARIABLE:
            raise ValueError(f"{MAIN_VARIABLE!r} must be the first variable, got {names}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not name.isidentifier():
                raise ValueError(f"invalid variable name {name!r}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @classmethod
    def of(cls, *params: str) -> "VarTable":
        return cls((MAIN_VARIABLE,) + params)

    @property
    def params(self) -> tuple:
        return self.names[1:]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}; known: {', '.join(self.names)}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarTable({', '.join(self.names)})"

    def extend(self, *params: str) -> "VarTable":
        return VarTable(self.names + tuple(p for p in params if p not in self._index))


def check_same(a: VarTable, b: VarTable) -> None:
    if a is not b and a != b:
        raise VarTableMismatch(f"{a} vs {b}")
