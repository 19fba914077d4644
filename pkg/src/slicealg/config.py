"""Configuration loading, validation, and the polynomial string parser.

One JSON document drives every check: {height, window, generators,
differentials, markers, checks}.  All defaults are embedded here, so a
check id alone is a complete invocation.  Validation failures raise
ConfigError carrying the dotted path of the offending entry; the CLI turns
that into exit status 2.

The generators and differentials sections exist so that sabotaged runs are
ordinary configurations: dropping a differential entry, a relation, or a
generator is how the negative controls are expressed.
"""

from __future__ import annotations

import json

from .graded import RingPresentation, Window

# The closed enumeration of check ids; the registry in checks.py must
# match it exactly.  Historical labels from the bundled reference tables.
CHECK_IDS = (
    "audits",
    "e2-region",
    "e4-page",
    "ko-e4",
    "ko-hilbert",
    "e8-generators",
    "prop4.5-even",
    "prop4.6-survival",
    "prop2.4-comparison",
    "hopf-axioms",
    "thm5.9-restrictions",
    "thm5.9-module",
    "thm5.9-coactions",
    "thm5.9-closure",
    "prop5.6-hurewicz",
    "cobar-ext",
)

DEFAULTS = {
    "height": 2,
    "window": None,  # null: every check supplies its own documented extent
    "generators": {"drop": [], "drop_relations": []},
    "differentials": {
        "d3": {"u": "a^3*v1", "t1": "a*v1"},
        "d7": {"t1sq": "a^3*v2", "t2": "a*w*v2"},
    },
    "markers": {
        "doubles": True,
        "multipliers": ["m1"],
        "asserted": [
            {
                "degree": [10, 0, -6],
                "element": "t2*w*v1^2",
                "label": "t2*w*v1^2",
                "reason": "bundled table lists this class as a d7 source, but "
                "the recomputed d7 lands on a multiple of a*v1 and vanishes; "
                "permanence is asserted from the table's transfer argument, "
                "not derived here",
            }
        ],
    },
    "checks": {},
}


class ConfigError(Exception):
    """Invalid configuration; path is the dotted location of the problem."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__("%s: %s" % (path, message))


# ---------------------------------------------------------------------------
# polynomial strings

def _tokenize(text: str, path: str):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            out.append((ch, ch))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j])))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j]))
            i = j
        else:
            raise ConfigError(path, "unexpected character %r in polynomial" % ch)
    return out


def parse_poly(pres: RingPresentation, text: str, path: str = "poly", missing_ok=False):
    """Parse 'a^3*v1 - 4*t1sq' into an element of the presentation.

    Grammar: sum of terms; a term is '*'-joined factors; a factor is an
    integer or a generator name with an optional '^' power.  No parentheses
    beyond that; the tables never need them.

    missing_ok: return None instead of raising when the text references a
    generator the presentation does not have.  Lower heights truncate the
    generator lists, so the bundled tables legitimately mention generators
    that are absent from some configurations.  Syntax errors always raise.
    """
    toks = _tokenize(text, path)
    if missing_ok:
        for kind, val in toks:
            if kind == "name" and val not in pres.gen_index:
                return None
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def factor():
        nonlocal pos
        kind, val = toks[pos]
        if kind == "int":
            pos += 1
            return val
        if kind == "name":
            pos += 1
            if val not in pres.gen_index:
                raise ConfigError(path, "unknown generator %r" % val)
            exp = 1
            if peek() == "^":
                pos += 1
                if peek() != "int":
                    raise ConfigError(path, "expected integer exponent")
                exp = toks[pos][1]
                pos += 1
                if exp < 0:
                    raise ConfigError(path, "negative exponent")
            return pres.gen(val) ** exp
        raise ConfigError(path, "expected generator or integer, got %r" % (val,))

    def term():
        nonlocal pos
        out = factor()
        while peek() == "*":
            pos += 1
            out = out * factor()
        return out

    if not toks:
        raise ConfigError(path, "empty polynomial")
    sign = 1
    if peek() in ("+", "-"):
        sign = -1 if toks[pos][0] == "-" else 1
        pos += 1
    total = sign * term()
    while pos < len(toks):
        kind = peek()
        if kind not in ("+", "-"):
            raise ConfigError(path, "expected + or - between terms")
        pos += 1
        nxt = term()
        total = total + nxt if kind == "+" else total - nxt
    return pres.coerce(total)


# ---------------------------------------------------------------------------
# document handling

def _merge(base, over, path):
    if isinstance(base, dict):
        if not isinstance(over, dict):
            raise ConfigError(path, "expected an object")
        out = dict(base)
        for k, v in over.items():
            if k in base and isinstance(base[k], dict):
                out[k] = _merge(base[k], v, "%s.%s" % (path, k))
            else:
                out[k] = v
        return out
    return over


def normalize(doc: dict) -> dict:
    """Merge over the defaults and validate shapes; returns the full config."""
    if not isinstance(doc, dict):
        raise ConfigError("config", "top level must be an object")
    for key in doc:
        if key not in DEFAULTS:
            raise ConfigError("config.%s" % key, "unknown section")
    cfg = _merge(DEFAULTS, doc, "config")

    if not isinstance(cfg["height"], int) or not 1 <= cfg["height"] <= 3:
        raise ConfigError("config.height", "height must be 1, 2, or 3")
    _check_window(cfg["window"], "config.window")

    gens = cfg["generators"]
    for key in gens:
        if key not in ("drop", "drop_relations"):
            raise ConfigError("config.generators.%s" % key, "unknown key")
    for key in ("drop", "drop_relations"):
        items = gens.get(key, [])
        if not isinstance(items, list) or not all(isinstance(s, str) for s in items):
            raise ConfigError("config.generators.%s" % key, "must be a list of strings")

    diffs = cfg["differentials"]
    for key, table in diffs.items():
        if key not in ("d3", "d7"):
            raise ConfigError("config.differentials.%s" % key, "unknown table")
        if not isinstance(table, dict):
            raise ConfigError("config.differentials.%s" % key, "must be an object")
        for g, val in table.items():
            if not isinstance(val, str):
                raise ConfigError(
                    "config.differentials.%s.%s" % (key, g), "image must be a string"
                )

    markers = cfg["markers"]
    for key in markers:
        if key not in ("doubles", "multipliers", "asserted"):
            raise ConfigError("config.markers.%s" % key, "unknown key")
    if not isinstance(markers.get("doubles", True), bool):
        raise ConfigError("config.markers.doubles", "must be a boolean")
    mult = markers.get("multipliers", [])
    if not isinstance(mult, list) or not all(isinstance(s, str) for s in mult):
        raise ConfigError("config.markers.multipliers", "must be a list of strings")
    for i, item in enumerate(markers.get("asserted", [])):
        where = "config.markers.asserted[%d]" % i
        if not isinstance(item, dict):
            raise ConfigError(where, "must be an object")
        deg = item.get("degree")
        if (
            not isinstance(deg, list)
            or len(deg) != 3
            or not all(isinstance(x, int) for x in deg)
        ):
            raise ConfigError(where + ".degree", "must be three integers")
        for key in ("element", "label", "reason"):
            if not isinstance(item.get(key), str) or not item.get(key):
                raise ConfigError(
                    where + "." + key, "required nonempty string (markers carry reasons)"
                )

    checks = cfg["checks"]
    if not isinstance(checks, dict):
        raise ConfigError("config.checks", "must be an object")
    for cid, over in checks.items():
        where = "config.checks.%s" % cid
        if cid not in CHECK_IDS:
            raise ConfigError(where, "unknown check id")
        if not isinstance(over, dict):
            raise ConfigError(where, "must be an object")
        for key, val in over.items():
            if key == "height":
                if not isinstance(val, int) or not 1 <= val <= 3:
                    raise ConfigError(where + ".height", "height must be 1, 2, or 3")
            elif key == "window":
                _check_window(val, where + ".window")
            else:
                raise ConfigError("%s.%s" % (where, key), "unknown key")
    return cfg


def _check_window(win, path):
    if win is None:
        return
    if (
        not isinstance(win, list)
        or len(win) != 3
        or not all(isinstance(x, int) and x >= 0 for x in win)
    ):
        raise ConfigError(path, "window must be three nonnegative integers")


def load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(str(path), "cannot read config: %s" % exc)
    except json.JSONDecodeError as exc:
        raise ConfigError(str(path), "invalid JSON: %s" % exc)
    return normalize(doc)


def check_options(cfg: dict, check_id: str, default_height, default_window,
                  pinned_height=False):
    """Resolve height and window for one check: per-check table wins, then
    the global sections, then the check's documented defaults.

    pinned_height: the check's claim only makes sense at its own height, so
    the global height section is skipped; only the per-check table can move
    it (at the caller's risk).
    """
    over = cfg.get("checks", {}).get(check_id, {})
    if pinned_height:
        height = over.get("height") or default_height
    else:
        height = over.get("height") or cfg.get("height") or default_height
    win = over.get("window") or cfg.get("window") or default_window
    if win is not None and not isinstance(win, Window):
        win = Window(*win)
    return height, win


# ---------------------------------------------------------------------------
# building configured presentations

def _strip_generators(pres: RingPresentation, names, keep_name=None):
    """Presentation without the named generators.

    Relations whose terms touch a dropped generator are unstatable and go
    with it; everything else is re-indexed onto the remaining generators.
    """
    drop_ix = {pres.gen_index[n] for n in names if n in pres.gen_index}
    if not drop_ix:
        return pres
    kept = [i for i in range(len(pres.gens)) if i not in drop_ix]
    gens = [(pres.gens[i].name, tuple(pres.gens[i].degree)) for i in kept]
    out = RingPresentation(gens, name=keep_name or pres.name)
    rels = []
    for rel in pres.relations:
        if any(any(e[i] for i in drop_ix) for e in rel.terms):
            continue
        poly = out.zero()
        for exps, c in rel.terms.items():
            poly = poly + c * out.monomial([exps[i] for i in kept])
        rels.append(poly)
    return RingPresentation(gens, rels, name=keep_name or pres.name)


def _drop_relations(pres: RingPresentation, texts, path):
    """Returns the thinned presentation and a per-text hit flag list."""
    if not texts:
        return pres, []
    targets = [
        parse_poly(pres, txt, "%s[%d]" % (path, i), missing_ok=True)
        for i, txt in enumerate(texts)
    ]
    hits = [False] * len(texts)
    kept = []
    for rel in pres.relations:
        matched = False
        for i, t in enumerate(targets):
            if t is not None and (rel == t or (rel + t).is_zero()):
                hits[i] = True
                matched = True
        if not matched:
            kept.append(rel)
    gens = [(g.name, tuple(g.degree)) for g in pres.gens]
    return RingPresentation(gens, kept, name=pres.name), hits


def build_pages(cfg: dict, height: int, max_c: int) -> dict:
    """Start page, model page, and both differential tables, as configured."""
    from .pages import start_page, fourth_page, fourth_page_map
    from .pages.differentials import DifferentialTable

    e2 = start_page(height, max_c)
    e4 = fourth_page(height, max_c)

    drops = cfg["generators"]["drop"]
    for i, name in enumerate(drops):
        if name not in e2.gen_index and name not in e4.gen_index:
            raise ConfigError("config.generators.drop[%d]" % i, "unknown generator %r" % name)
    if drops:
        e2 = _strip_generators(e2, drops)
        e4 = _strip_generators(e4, drops)

    rel_texts = cfg["generators"]["drop_relations"]
    if rel_texts:
        e4, h4 = _drop_relations(e4, rel_texts, "config.generators.drop_relations")
        e2, h2 = _drop_relations(e2, rel_texts, "config.generators.drop_relations")
        for i, (a, b) in enumerate(zip(h4, h2)):
            if not (a or b):
                raise ConfigError(
                    "config.generators.drop_relations[%d]" % i,
                    "no presentation relation matched %r" % rel_texts[i],
                )

    def table(pres, key, page):
        images = {}
        for g, text in cfg["differentials"].get(key, {}).items():
            if g not in pres.gen_index:
                continue  # heights without this generator simply skip it
            img = parse_poly(
                pres, text, "config.differentials.%s.%s" % (key, g), missing_ok=True
            )
            if img is None:
                continue  # image mentions a generator this height lacks
            images[g] = img
        return DifferentialTable(pres, page, images)

    d3 = table(e2, "d3", 3)
    d7 = table(e4, "d7", 7)
    return {
        "e2": e2,
        "e4": e4,
        "d3": d3,
        "d7": d7,
        "map4": fourth_page_map(e4, e2),
    }


def marker_rules(cfg: dict, pres: RingPresentation):
    from .pages.survival import MarkerRules

    markers = cfg["markers"]
    asserted = []
    for i, item in enumerate(markers.get("asserted", [])):
        where = "config.markers.asserted[%d].element" % i
        asserted.append(
            {
                "degree": tuple(item["degree"]),
                "element": parse_poly(pres, item["element"], where),
                "label": item["label"],
                "reason": item["reason"],
            }
        )
    return MarkerRules(
        doubles=markers.get("doubles", True),
        multipliers=tuple(markers.get("multipliers", ())),
        asserted=asserted,
    )
