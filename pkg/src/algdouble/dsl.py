"""Line-oriented definition language for algebras, tensors and table rows.

A document is a sequence of declarations::

    algebra A2
    dim 2
    product e1 e1 = e1
    product e1 e2 = e2

    tensor r over A2 = a12*(e1 x e2) + a21*(e2 x e1)
    require a21 = -a12
    require a12 != 0

    row 6.A2 frobenius A2 r
      expect e1 * f1 = f1
      expect f2 * f2 = -a12*f2
    end

``require`` lines attach to the most recent declaration; an equality whose
left side is a bare name becomes a substitution binding, and ``!= 0`` lines
are reporting-only side conditions.  Dual basis vectors are written
``f1..fn`` (the ``*`` glyph being reserved for multiplication).  Zero
products are omitted; omitted entries default to zero.  ``#`` starts a
comment.  Coefficients are exact: integers and ``p/q`` rationals only.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import Scalar, Constraint, EQUALS_ZERO, ZERO
from .algebra import Algebra, format_combination
from .tensor import Tensor2
from .dendriform import DendriformStructure

ROW_KINDS = ("aybe", "deq", "frobenius", "connes")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 0):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


# -- lexer ---------------------------------------------------------------

_SYMBOLS = ("!=", "+", "-", "*", "/", "^", "=", "(", ")")


def _tokenize_line(text: str, lineno: int):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch == "#":
            break
        col = i + 1
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], lineno, col))
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], lineno, col))
            i = j
            continue
        if text.startswith("!=", i):
            tokens.append(("sym", "!=", lineno, col))
            i += 2
            continue
        if ch in "+-*/^=()":
            tokens.append(("sym", ch, lineno, col))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", lineno, col)
    return tokens


class _TokenStream:
    def __init__(self, tokens, lineno):
        self.tokens = tokens
        self.pos = 0
        self.lineno = lineno

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of line", self.lineno,
                             self.tokens[-1][3] if self.tokens else 0)
        self.pos += 1
        return tok

    def expect_sym(self, sym):
        tok = self.next()
        if tok[0] != "sym" or tok[1] != sym:
            raise ParseError(f"expected {sym!r}, found {tok[1]!r}",
                             tok[2], tok[3])
        return tok

    def expect_name(self, what="a name"):
        tok = self.next()
        if tok[0] != "name":
            raise ParseError(f"expected {what}, found {tok[1]!r}",
                             tok[2], tok[3])
        return tok

    def at_end(self):
        return self.pos >= len(self.tokens)

    def require_end(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing input {tok[1]!r}",
                             tok[2], tok[3])


# -- expression parsing ----------------------------------------------------


def _parse_rational(stream) -> Fraction:
    tok = stream.next()
    if tok[0] != "int":
        raise ParseError(f"expected a number, found {tok[1]!r}",
                         tok[2], tok[3])
    value = Fraction(int(tok[1]))
    nxt = stream.peek()
    if nxt is not None and nxt[:2] == ("sym", "/"):
        stream.next()
        den = stream.next()
        if den[0] != "int":
            raise ParseError("expected a denominator", den[2], den[3])
        if int(den[1]) == 0:
            raise ParseError("zero denominator", den[2], den[3])
        value = Fraction(int(tok[1]), int(den[1]))
    return value


def _parse_expr(stream) -> Scalar:
    value = _parse_expr_term(stream)
    while True:
        tok = stream.peek()
        if tok is None or tok[0] != "sym" or tok[1] not in "+-":
            return value
        stream.next()
        rhs = _parse_expr_term(stream)
        value = value + rhs if tok[1] == "+" else value - rhs


def _parse_expr_term(stream) -> Scalar:
    value = _parse_expr_factor(stream)
    while True:
        tok = stream.peek()
        if tok is None or tok[0] != "sym" or tok[1] != "*":
            return value
        stream.next()
        value = value * _parse_expr_factor(stream)


def _parse_expr_factor(stream) -> Scalar:
    tok = stream.peek()
    if tok is None:
        raise ParseError("unexpected end of expression", stream.lineno, 0)
    if tok[0] == "sym" and tok[1] in "+-":
        stream.next()
        inner = _parse_expr_factor(stream)
        return inner if tok[1] == "+" else -inner
    return _parse_expr_atom(stream)


def _parse_expr_atom(stream) -> Scalar:
    tok = stream.peek()
    if tok[0] == "sym" and tok[1] == "(":
        stream.next()
        inner = _parse_expr(stream)
        stream.expect_sym(")")
        value = inner
    elif tok[0] == "int":
        value = Scalar(_parse_rational(stream))
    elif tok[0] == "name":
        stream.next()
        value = Scalar.var(tok[1])
    else:
        raise ParseError(f"unexpected {tok[1]!r} in expression",
                         tok[2], tok[3])
    nxt = stream.peek()
    if nxt is not None and nxt[:2] == ("sym", "^"):
        stream.next()
        power = stream.next()
        if power[0] != "int":
            raise ParseError("expected an integer power", power[2], power[3])
        value = value ** int(power[1])
    return value


def _is_basis_pair_open(stream) -> bool:
    toks = stream.tokens
    i = stream.pos
    return (i + 4 < len(toks) + 1 and len(toks) >= i + 5 and
            toks[i][:2] == ("sym", "(") and toks[i + 1][0] == "name" and
            toks[i + 2][:2] == ("name", "x") and toks[i + 3][0] == "name" and
            toks[i + 4][:2] == ("sym", ")"))


def _parse_tensor_expr(stream, basis_index, lineno):
    """Sum of coefficient * (e_i x e_j) terms into a coefficient matrix."""
    n = len(basis_index)
    matrix = [[ZERO for _ in range(n)] for _ in range(n)]
    sign = 1
    first = True
    while True:
        tok = stream.peek()
        if tok is None:
            if first:
                raise ParseError("empty tensor expression", lineno, 0)
            break
        if not first:
            if tok[0] != "sym" or tok[1] not in "+-":
                raise ParseError(f"expected + or -, found {tok[1]!r}",
                                 tok[2], tok[3])
            stream.next()
            sign = 1 if tok[1] == "+" else -1
        first = False
        coeff, pair = _parse_tensor_term(stream, basis_index)
        if pair is None:
            if not coeff.is_zero():
                raise ParseError("tensor term without a basis pair must be 0",
                                 tok[2] if tok else lineno,
                                 tok[3] if tok else 0)
            continue
        i, j = pair
        matrix[i][j] = matrix[i][j] + (coeff if sign > 0 else -coeff)
    return matrix


def _parse_tensor_term(stream, basis_index):
    coeff = Scalar(1)
    negate = False
    while True:
        tok = stream.peek()
        if tok is not None and tok[0] == "sym" and tok[1] in "+-":
            stream.next()
            if tok[1] == "-":
                negate = not negate
            continue
        break
    saw_factor = False
    while True:
        if _is_basis_pair_open(stream):
            stream.expect_sym("(")
            left = stream.expect_name("a basis name")
            stream.expect_name("x")
            right = stream.expect_name("a basis name")
            stream.expect_sym(")")
            for tok in (left, right):
                if tok[1] not in basis_index:
                    raise ParseError(f"unknown basis name {tok[1]!r}",
                                     tok[2], tok[3])
            value = -coeff if negate else coeff
            return value, (basis_index[left[1]], basis_index[right[1]])
        tok = stream.peek()
        if tok is None:
            if not saw_factor:
                raise ParseError("empty tensor term", stream.lineno, 0)
            break
        factor = _parse_expr_factor(stream)
        coeff = coeff * factor if saw_factor else factor
        saw_factor = True
        nxt = stream.peek()
        if nxt is not None and nxt[:2] == ("sym", "*"):
            stream.next()
            continue
        break
    return (-coeff if negate else coeff), None


def _parse_combination(stream, basis_index, lineno):
    """Linear combination over named basis vectors, e.g. -a12*e2 + f1."""
    n = len(basis_index)
    coeffs = [ZERO] * n
    sign = 1
    first = True
    while True:
        tok = stream.peek()
        if tok is None:
            if first:
                raise ParseError("empty combination", lineno, 0)
            break
        if not first:
            if tok[0] != "sym" or tok[1] not in "+-":
                raise ParseError(f"expected + or -, found {tok[1]!r}",
                                 tok[2], tok[3])
            stream.next()
            sign = 1 if tok[1] == "+" else -1
        first = False
        coeff, slot = _parse_combination_term(stream, basis_index)
        if slot is None:
            if not coeff.is_zero():
                raise ParseError("term without a basis vector must be 0",
                                 tok[2], tok[3])
            continue
        coeffs[slot] = coeffs[slot] + (coeff if sign > 0 else -coeff)
    return tuple(coeffs)


def _parse_combination_term(stream, basis_index):
    coeff = Scalar(1)
    negate = False
    while True:
        tok = stream.peek()
        if tok is not None and tok[0] == "sym" and tok[1] in "+-":
            stream.next()
            if tok[1] == "-":
                negate = not negate
            continue
        break
    saw_coeff = False
    while True:
        tok = stream.peek()
        if tok is not None and tok[0] == "name" and tok[1] in basis_index:
            stream.next()
            value = -coeff if negate else coeff
            return value, basis_index[tok[1]]
        if tok is None:
            if saw_coeff:
                return (-coeff if negate else coeff), None
            raise ParseError("missing term", stream.lineno, 0)
        if tok[0] == "sym" and tok[1] != "(":
            raise ParseError(f"unexpected {tok[1]!r} in combination",
                             tok[2], tok[3])
        factor = _parse_expr_atom(stream)
        coeff = coeff * factor if saw_coeff else factor
        saw_coeff = True
        nxt = stream.peek()
        if nxt is not None and nxt[:2] == ("sym", "*"):
            stream.next()
            continue
        return (-coeff if negate else coeff), None


# -- document model ----------------------------------------------------------


class TensorDecl:
    __slots__ = ("name", "over", "tensor")

    def __init__(self, name, over, tensor):
        self.name = name
        self.over = over
        self.tensor = tensor

    def __eq__(self, other):
        return (self.name, self.over, self.tensor.a,
                self.tensor.constraints) == \
               (other.name, other.over, other.tensor.a,
                other.tensor.constraints)


class RowSpec:
    __slots__ = ("row_id", "kind", "structure", "tensor", "with_bindings",
                 "expects", "line")

    def __init__(self, row_id, kind, structure, tensor, with_bindings,
                 expects, line=0):
        self.row_id = row_id
        self.kind = kind
        self.structure = structure
        self.tensor = tensor
        self.with_bindings = list(with_bindings)
        self.expects = list(expects)
        self.line = line

    def __eq__(self, other):
        return (self.row_id, self.kind, self.structure, self.tensor,
                self.with_bindings, self.expects) == \
               (other.row_id, other.kind, other.structure, other.tensor,
                other.with_bindings, other.expects)


class Document:
    def __init__(self):
        self.algebras: dict = {}
        self.dendriforms: dict = {}
        self.tensors: dict = {}
        self.parents: dict = {}
        self.params: dict = {}
        self.rows: list = []
        self.order: list = []

    def structure(self, name):
        if name in self.algebras:
            return self.algebras[name]
        if name in self.dendriforms:
            return self.dendriforms[name]
        raise KeyError(name)

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        if self.order != other.order or self.rows != other.rows:
            return False
        for name, alg in self.algebras.items():
            theirs = other.algebras.get(name)
            if theirs is None or alg.c != theirs.c or \
                    alg.constraints != theirs.constraints:
                return False
        for name, d in self.dendriforms.items():
            theirs = other.dendriforms.get(name)
            if theirs is None or d.succ != theirs.succ or \
                    d.prec != theirs.prec or \
                    d.constraints != theirs.constraints or \
                    self.parents.get(name) != other.parents.get(name):
                return False
        return self.tensors == other.tensors


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self):
        self.doc = Document()
        self.pending = None       # declaration being accumulated
        self.row = None           # row block being accumulated

    def parse(self, source: str) -> Document:
        for lineno, raw in enumerate(source.splitlines(), start=1):
            tokens = _tokenize_line(raw, lineno)
            if not tokens:
                continue
            stream = _TokenStream(tokens, lineno)
            head = stream.next()
            if head[0] != "name":
                raise ParseError(f"unexpected {head[1]!r}",
                                 head[2], head[3])
            if self.row is not None:
                self._row_line(head, stream)
            else:
                self._top_line(head, stream)
        if self.row is not None:
            raise ParseError("row block never closed with 'end'",
                             self.row["line"], 1)
        self._flush()
        return self.doc

    # -- declaration handling --------------------------------------------

    def _top_line(self, head, stream):
        keyword = head[1]
        if keyword in ("algebra", "dendriform"):
            self._flush()
            name_tok = stream.expect_name("a declaration name")
            stream.require_end()
            self._check_fresh(name_tok)
            self.pending = {"kind": keyword, "name": name_tok[1],
                            "dim": None, "parent": None, "params": [],
                            "products": {}, "succ": {}, "prec": {},
                            "constraints": [], "line": head[2]}
        elif keyword == "tensor":
            self._flush()
            name_tok = stream.expect_name("a tensor name")
            over_tok = stream.expect_name("'over'")
            if over_tok[1] != "over":
                raise ParseError("expected 'over'", over_tok[2], over_tok[3])
            owner_tok = stream.expect_name("an algebra name")
            stream.expect_sym("=")
            self._check_fresh(name_tok)
            try:
                owner = self.doc.structure(owner_tok[1])
            except KeyError:
                raise ParseError(f"unknown structure {owner_tok[1]!r}",
                                 owner_tok[2], owner_tok[3]) from None
            basis_index = {nm: i for i, nm in enumerate(owner.basis_names)}
            matrix = _parse_tensor_expr(stream, basis_index, head[2])
            stream.require_end()
            self.pending = {"kind": "tensor", "name": name_tok[1],
                            "over": owner_tok[1], "matrix": matrix,
                            "constraints": [], "line": head[2]}
        elif keyword == "require":
            if self.pending is None:
                raise ParseError("'require' with nothing to attach to",
                                 head[2], head[3])
            self.pending["constraints"].append(
                self._parse_require(stream, head))
        elif keyword == "dim":
            decl = self._structure_pending(head)
            tok = stream.next()
            if tok[0] != "int":
                raise ParseError("expected a dimension", tok[2], tok[3])
            stream.require_end()
            decl["dim"] = int(tok[1])
        elif keyword == "param":
            decl = self._structure_pending(head)
            while not stream.at_end():
                decl["params"].append(stream.expect_name("a parameter")[1])
            if not decl["params"]:
                raise ParseError("'param' needs at least one name",
                                 head[2], head[3])
        elif keyword == "parent":
            decl = self._structure_pending(head)
            if decl["kind"] != "dendriform":
                raise ParseError("'parent' only applies to dendriform blocks",
                                 head[2], head[3])
            tok = stream.expect_name("an algebra name")
            stream.require_end()
            if tok[1] not in self.doc.algebras:
                raise ParseError(f"unknown algebra {tok[1]!r}",
                                 tok[2], tok[3])
            decl["parent"] = tok[1]
        elif keyword in ("product", "succ", "prec"):
            decl = self._structure_pending(head)
            target = {"product": "products"}.get(keyword, keyword)
            if decl["kind"] == "algebra" and keyword != "product":
                raise ParseError(f"{keyword!r} lines belong to dendriform "
                                 "blocks", head[2], head[3])
            if decl["kind"] == "dendriform" and keyword == "product":
                raise ParseError("use 'succ'/'prec' inside dendriform blocks",
                                 head[2], head[3])
            if decl["dim"] is None:
                raise ParseError("'dim' must precede product lines",
                                 head[2], head[3])
            names = {f"e{i + 1}": i for i in range(decl["dim"])}
            left = stream.expect_name("a basis name")
            right = stream.expect_name("a basis name")
            for tok in (left, right):
                if tok[1] not in names:
                    raise ParseError(f"unknown basis name {tok[1]!r}",
                                     tok[2], tok[3])
            stream.expect_sym("=")
            combo = _parse_combination(stream, names, head[2])
            stream.require_end()
            key = (names[left[1]], names[right[1]])
            store = decl[target]
            if key in store:
                raise ParseError(
                    f"duplicate definition of {left[1]} {right[1]}",
                    head[2], head[3])
            store[key] = combo
        elif keyword == "row":
            self._flush()
            self._open_row(head, stream)
        elif keyword == "end":
            raise ParseError("'end' outside of a row block",
                             head[2], head[3])
        else:
            raise ParseError(f"unknown declaration {keyword!r}",
                             head[2], head[3])

    def _structure_pending(self, head):
        if self.pending is None or \
                self.pending["kind"] not in ("algebra", "dendriform"):
            raise ParseError(f"{head[1]!r} outside of a declaration block",
                             head[2], head[3])
        return self.pending

    def _check_fresh(self, tok):
        name = tok[1]
        taken = set(self.doc.algebras) | set(self.doc.dendriforms) | \
            set(self.doc.tensors)
        if self.pending is not None:
            taken.add(self.pending["name"])
        if name in taken:
            raise ParseError(f"duplicate definition of {name!r}",
                             tok[2], tok[3])

    def _parse_require(self, stream, head):
        lhs = _parse_expr(stream)
        tok = stream.next()
        if tok[:2] == ("sym", "!="):
            zero = stream.next()
            if zero[:2] != ("int", "0"):
                raise ParseError("'!=' conditions must compare against 0",
                                 zero[2], zero[3])
            stream.require_end()
            if lhs.is_zero():
                raise ParseError("'0 != 0' is unsatisfiable",
                                 head[2], head[3])
            return Constraint.nonzero(lhs)
        if tok[:2] != ("sym", "="):
            raise ParseError("expected '=' or '!=' in require",
                             tok[2], tok[3])
        rhs = _parse_expr(stream)
        stream.require_end()
        lhs_vars = sorted(lhs.variables())
        if len(lhs.terms) == 1 and len(lhs_vars) == 1 and \
                lhs == Scalar.var(lhs_vars[0]) and \
                lhs_vars[0] not in rhs.variables():
            return Constraint.equality(lhs_vars[0], rhs)
        return Constraint(EQUALS_ZERO, lhs - rhs)

    def _flush(self):
        decl = self.pending
        if decl is None:
            return
        self.pending = None
        name = decl["name"]
        if decl["kind"] == "tensor":
            owner = self.doc.structure(decl["over"])
            carrier = owner if isinstance(owner, Algebra) else \
                Algebra(owner.dim, basis_names=owner.basis_names)
            tensor = Tensor2(carrier, decl["matrix"],
                             constraints=decl["constraints"])
            self.doc.tensors[name] = TensorDecl(name, decl["over"], tensor)
            self.doc.order.append(("tensor", name))
            return
        if decl["dim"] is None:
            raise ParseError(f"declaration {name!r} is missing 'dim'",
                             decl["line"], 1)
        if decl["kind"] == "algebra":
            self.doc.algebras[name] = Algebra(
                decl["dim"], decl["products"],
                constraints=decl["constraints"])
            self.doc.order.append(("algebra", name))
        else:
            parent = self.doc.algebras.get(decl["parent"]) \
                if decl["parent"] else None
            self.doc.dendriforms[name] = DendriformStructure(
                decl["dim"], succ=decl["succ"], prec=decl["prec"],
                constraints=decl["constraints"], parent=parent)
            self.doc.parents[name] = decl["parent"]
            self.doc.order.append(("dendriform", name))
        if decl["params"]:
            self.doc.params[name] = list(decl["params"])

    # -- row blocks -----------------------------------------------------------

    def _open_row(self, head, stream):
        id_tok = stream.next()
        if id_tok[0] not in ("name", "int"):
            raise ParseError("expected a row identifier", id_tok[2],
                             id_tok[3])
        row_id = id_tok[1]
        kind_tok = stream.expect_name("a row kind")
        if kind_tok[1] not in ROW_KINDS:
            raise ParseError(f"unknown row kind {kind_tok[1]!r}; expected "
                             f"one of {', '.join(ROW_KINDS)}",
                             kind_tok[2], kind_tok[3])
        struct_tok = stream.expect_name("a structure name")
        tensor_tok = None
        if not stream.at_end():
            tensor_tok = stream.expect_name("a tensor name")
        stream.require_end()
        kind = kind_tok[1]
        try:
            structure = self.doc.structure(struct_tok[1])
        except KeyError:
            raise ParseError(f"unknown structure {struct_tok[1]!r}",
                             struct_tok[2], struct_tok[3]) from None
        if kind in ("aybe", "frobenius") and \
                struct_tok[1] not in self.doc.algebras:
            raise ParseError(f"{kind} rows need an algebra",
                             struct_tok[2], struct_tok[3])
        if kind in ("deq", "connes") and \
                struct_tok[1] not in self.doc.dendriforms:
            raise ParseError(f"{kind} rows need a dendriform structure",
                             struct_tok[2], struct_tok[3])
        if tensor_tok is None:
            raise ParseError("row is missing its tensor",
                             kind_tok[2], kind_tok[3])
        if tensor_tok[1] not in self.doc.tensors:
            raise ParseError(f"unknown tensor {tensor_tok[1]!r}",
                             tensor_tok[2], tensor_tok[3])
        decl = self.doc.tensors[tensor_tok[1]]
        if decl.tensor.algebra.dim != structure.dim:
            raise ParseError(
                f"tensor {tensor_tok[1]!r} has dimension "
                f"{decl.tensor.algebra.dim}, the row needs {structure.dim}",
                tensor_tok[2], tensor_tok[3])
        n = structure.dim
        names = {f"e{i + 1}": i for i in range(n)}
        names.update({f"f{i + 1}": n + i for i in range(n)})
        self.row = {"row_id": row_id, "kind": kind,
                    "structure": struct_tok[1], "tensor": tensor_tok[1],
                    "with": [], "expects": [], "basis": names,
                    "line": head[2]}

    def _row_line(self, head, stream):
        keyword = head[1]
        row = self.row
        if keyword == "end":
            stream.require_end()
            self.doc.rows.append(RowSpec(
                row["row_id"], row["kind"], row["structure"], row["tensor"],
                row["with"], row["expects"], row["line"]))
            self.row = None
            return
        if keyword == "with":
            tok = stream.expect_name("a parameter name")
            stream.expect_sym("=")
            value = _parse_expr(stream)
            stream.require_end()
            row["with"].append((tok[1], value))
            return
        if keyword == "expect":
            left = stream.expect_name("a basis name")
            stream.expect_sym("*")
            right = stream.expect_name("a basis name")
            for tok in (left, right):
                if tok[1] not in row["basis"]:
                    raise ParseError(f"unknown basis name {tok[1]!r}",
                                     tok[2], tok[3])
            stream.expect_sym("=")
            combo = _parse_combination(stream, row["basis"], head[2])
            stream.require_end()
            row["expects"].append((row["basis"][left[1]],
                                   row["basis"][right[1]], combo))
            return
        raise ParseError(f"unexpected {keyword!r} inside a row block",
                         head[2], head[3])


def parse(source: str) -> Document:
    """Parse a document; raises ParseError with line/col on bad input."""
    return _Parser().parse(source)


# -- rendering ---------------------------------------------------------------


def _render_tensor_matrix(matrix, names) -> str:
    keys, coeffs = [], []
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            if not matrix[i][j].is_zero():
                keys.append(f"({names[i]} x {names[j]})")
                coeffs.append(matrix[i][j])
    if not keys:
        return "0"
    return format_combination(coeffs, keys)


def render(doc: Document) -> str:
    """Deterministic text form; reparsing yields an equal Document."""
    out = []
    for kind, name in doc.order:
        if kind == "algebra":
            alg = doc.algebras[name]
            out.append(f"algebra {name}")
            out.append(f"dim {alg.dim}")
            for p in doc.params.get(name, ()):
                out.append(f"param {p}")
            for i, j, vec in alg.product_equations():
                out.append(f"product e{i + 1} e{j + 1} = {vec}")
            for c in alg.constraints:
                out.append(f"require {c}")
        elif kind == "dendriform":
            d = doc.dendriforms[name]
            out.append(f"dendriform {name}")
            out.append(f"dim {d.dim}")
            if doc.parents.get(name):
                out.append(f"parent {doc.parents[name]}")
            for p in doc.params.get(name, ()):
                out.append(f"param {p}")
            for op, i, j, vec in d.product_equations():
                out.append(f"{op} e{i + 1} e{j + 1} = "
                           f"{format_combination(vec, d.basis_names)}")
            for c in d.constraints:
                out.append(f"require {c}")
        else:
            decl = doc.tensors[name]
            owner = doc.structure(decl.over)
            body = _render_tensor_matrix(decl.tensor.a, owner.basis_names)
            out.append(f"tensor {name} over {decl.over} = {body}")
            for c in decl.tensor.constraints:
                out.append(f"require {c}")
        out.append("")
    for row in doc.rows:
        structure = doc.structure(row.structure)
        n = structure.dim
        names = [f"e{i + 1}" for i in range(n)] + \
            [f"f{i + 1}" for i in range(n)]
        tensor_part = f" {row.tensor}" if row.tensor else ""
        out.append(f"row {row.row_id} {row.kind} {row.structure}"
                   f"{tensor_part}")
        for var, value in row.with_bindings:
            out.append(f"  with {var} = {value}")
        for i, j, combo in row.expects:
            out.append(f"  expect {names[i]} * {names[j]} = "
                       f"{format_combination(combo, names)}")
        out.append("end")
        out.append("")
    return "\n".join(out)
