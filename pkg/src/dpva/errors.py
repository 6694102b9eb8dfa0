class QuiverError(ValueError):
    """Malformed quiver data or a word referencing undeclared arrows/vertices."""


class InversesNotJettable(ValueError):
    """Jet construction applied to a quiver with invertible arrows."""


class CapExceeded(ValueError):
    """A derivation step needs a jet generator beyond the materialized order cap."""


class JetVarInPoissonContext(ValueError):
    """A plain (order-0) Poisson bracket was asked to handle a jet variable."""


class ParseError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", col {col}" if col is not None else "")
        super().__init__(msg + where)
