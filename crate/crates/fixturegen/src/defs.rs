//! The ten CPATs, the code shapes their variants are drawn from, and the
//! inputs the generated tests feed them.
//!
//! Shapes use placeholders: `$O` output, `$I` primary input, `$J` second
//! input, `$L` loop variable, `$M` helper. A shape that spells the CPAT's
//! own output name instead of `$O` keeps that name in every variant.

use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutKind {
    Int,
    List,
    Dict,
    Str,
}

/// V, V_c, V_u, V_a, T1, T2.
#[derive(Clone, Copy, Debug)]
pub struct Row {
    pub v: usize,
    pub v_c: usize,
    pub v_u: usize,
    pub v_a: usize,
    pub t1: usize,
    pub t2: usize,
}

pub struct Def {
    pub n: usize,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub inputs: &'static [(&'static str, &'static str)],
    pub output: &'static str,
    pub imports: &'static [&'static str],
    /// Placeholder whose value corruptions touch, `O` or `J`.
    pub sink: char,
    pub out_kind: OutKind,
    pub shapes: &'static [&'static str],
    pub pools: [(char, &'static [&'static str]); 5],
    pub types: [(char, &'static str); 5],
    pub row: Row,
    /// Incorrect variants the generated suite lets through.
    pub fp: usize,
}

impl Def {
    pub fn id(&self) -> String {
        format!("cpat-{}", self.n)
    }

    pub fn primary(&self) -> &'static str {
        self.inputs[0].0
    }

    pub fn pool(&self, role: char) -> &'static [&'static str] {
        self.pools.iter().find(|(r, _)| *r == role).map(|(_, p)| *p).unwrap_or(&[])
    }

    pub fn role_type(&self, role: char) -> &'static str {
        self.types.iter().find(|(r, _)| *r == role).map(|(_, t)| *t).unwrap_or("Any")
    }

    pub fn json(&self) -> serde_json::Value {
        let inputs: Vec<_> = self
            .inputs
            .iter()
            .map(|(n, t)| serde_json::json!({"name": n, "type": t}))
            .collect();
        let mut guards = serde_json::Map::new();
        guards.insert(
            self.primary().to_string(),
            serde_json::json!([{"kind": "type", "value": self.inputs[0].1}]),
        );
        serde_json::json!({
            "id": self.id(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "input_vars": inputs,
            "output_vars": [self.output],
            "imports": self.imports,
            "miner_guards": guards,
        })
    }

    /// Statements binding the inputs for a test whose primary input has
    /// `len` elements, and the argument list of the call.
    pub fn test_inputs(&self, len: usize) -> (Vec<String>, String) {
        let ints = |xs: &[i64]| list(xs[..len].iter().map(|x| x.to_string()));
        let names: Vec<&str> = self.inputs.iter().map(|(n, _)| *n).collect();
        let binds: Vec<(String, String)> = match self.n {
            1 => vec![(names[0].into(), ints(&INTS))],
            2 => {
                let d = (0..len).map(|k| format!("\"{}\": {}", KEYS[k], INTS[k]));
                vec![
                    (names[0].into(), format!("{{{}}}", d.collect::<Vec<_>>().join(", "))),
                    (names[1].into(), "{\"z\": 1, \"a\": 0}".into()),
                ]
            }
            3 => vec![(names[0].into(), ints(&INTS)), (names[1].into(), list(L2.iter().map(|x| x.to_string())))],
            4 => vec![
                (names[0].into(), list(WORDS[..len].iter().map(|w| format!("\"{}\"", w)))),
                (names[1].into(), "\"colors: \"".into()),
            ],
            5 => vec![(names[0].into(), ints(&REPEAT)), (names[1].into(), "lambda x: x * 10".into())],
            6 => vec![(names[0].into(), ints(&REPEAT))],
            7 => vec![(names[0].into(), ints(&INTS))],
            8 | 9 => vec![(names[0].into(), ints(&INTS)), (names[1].into(), ints(&INTS2))],
            10 => vec![(names[0].into(), ints(&INTS)), (names[1].into(), "lambda x: x % 2 == 0".into())],
            _ => unreachable!(),
        };
        let lines = binds.iter().map(|(n, v)| format!("{} = {}", n, v)).collect();
        (lines, names.join(", "))
    }

    /// Same values, written inline in the call.
    pub fn literal_args(&self, len: usize) -> String {
        let (lines, _) = self.test_inputs(len);
        lines
            .iter()
            .map(|l| l.split_once(" = ").unwrap().1.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn list(items: impl Iterator<Item = String>) -> String {
    format!("[{}]", items.collect::<Vec<_>>().join(", "))
}

const INTS: [i64; 9] = [4, 7, 1, 9, 3, 8, 2, 6, 5];
const INTS2: [i64; 9] = [2, 5, 3, 1, 6, 2, 7, 3, 4];
const REPEAT: [i64; 9] = [1, 2, 1, 3, 2, 1, 4, 3, 1];
const L2: [i64; 7] = [7, 9, 8, 6, 10, 1, 4];
const KEYS: [&str; 9] = ["a", "b", "c", "d", "e", "f", "g", "h", "i"];
const WORDS: [&str; 9] = ["red", "green", "blue", "cyan", "gray", "pink", "teal", "navy", "gold"];

/// Length of the primary input in the test of each kind. A variant of fault
/// kind k misbehaves exactly when the primary input has `KIND_LEN[k - 1]` items.
pub const KIND_LEN: [usize; 7] = [3, 0, 1, 5, 2, 7, 9];

const INT_OUT: &[&str] = &[
    "total", "acc", "agg", "running", "tally", "subtotal", "accum", "score", "grand", "s_total", "amount", "count_sum",
];
const LIST_OUT: &[&str] = &[
    "out", "collected", "found", "matches", "bucket", "kept", "picked", "hits", "shared", "both", "acc_list", "res_list",
];
const DICT_OUT: &[&str] = &[
    "groups", "table", "index", "buckets", "mapping", "grouped", "tally_map", "seen_map", "by_key", "registry", "freq",
    "hist",
];
const LISTS: &[&str] = &[
    "values", "nums", "xs", "data", "items", "numbers", "vals", "seq", "arr", "scores", "samples", "series", "entries",
    "readings", "weights",
];
const LISTS2: &[&str] = &[
    "others", "ys", "rhs", "right", "second", "b_vals", "other_vals", "ref", "pool", "targets", "coeffs", "factors",
];
const STRS: &[&str] = &[
    "text", "line", "buf", "message", "header", "label", "msg", "caption", "banner", "prefix_str", "title", "summary",
];
const WORD_LISTS: &[&str] = &[
    "words", "names", "tags", "parts", "tokens", "labels", "fields", "columns", "keys_list", "titles",
];
const CALLS: &[&str] = &["key_fn", "fn", "transform", "mapper", "func", "proj", "op", "conv", "scale", "g"];
const PREDS: &[&str] = &["pred", "check", "keep", "is_ok", "accept", "test_fn", "valid", "ok", "wanted", "good"];
const DICT_SRC: &[&str] = &[
    "src", "extra", "updates", "changes", "patch", "overrides", "incoming", "delta", "new_vals", "additions",
];
const DICT_DST: &[&str] = &[
    "target", "dest", "merged", "base", "out_map", "acc_map", "config", "settings", "store", "cache",
];
const LOOP: &[&str] = &["x", "v", "n", "item", "num", "val", "elt", "j", "idx", "pos", "key", "w"];
const AUX: &[&str] = &["y", "u", "tmp", "cur", "run", "aux", "step", "z", "part", "piece", "prev", "rest"];
const NONE: &[&str] = &[];

const C1: &[&str] = &[
    "$O = 0\nfor $L in $I:\n    $O += $L",
    "$O = 0\nfor $L in $I:\n    $O = $O + $L",
    "$O = 0\nfor $L in range(len($I)):\n    $O += $I[$L]",
    "$O = 0\nfor $L in range(len($I)):\n    $O = $O + $I[$L]",
    "$O = 0\nfor $L in $I:\n    $O = $L + $O",
    "$O = 0\nfor $L in $I:\n    if $L != 0:\n        $O += $L",
    "$O = sum($I)",
    "$O = functools.reduce(operator.add, $I, 0)",
    "$O = sum([$L for $L in $I])",
    "result = 0\n$M = 0\nwhile $M < len($I):\n    result += $I[$M]\n    $M += 1",
    "def $M($L):\n    return sum($L)\nresult = $M($I)",
];

const C2: &[&str] = &[
    "for $L, $M in $I.items():\n    $J[$L] = $M",
    "for $L in $I:\n    $J[$L] = $I[$L]",
    "for $L in $I.keys():\n    $J[$L] = $I[$L]",
    "for $L, $M in $I.items():\n    $J.update({$L: $M})",
    "for $L in list($I):\n    $J[$L] = $I[$L]",
    "for $L, $M in $I.items():\n    if $L not in $J or $J[$L] != $M:\n        $J[$L] = $M",
    "$M = dict($I)\n$J.update($M)",
    "$M = {$L: $I[$L] for $L in $I}\n$J.update($M)",
    "$M = list($I.keys())\nwhile $M:\n    $L = $M.pop()\n    $J[$L] = $I[$L]",
    "$M = list($I.items())\nfor $L in $M:\n    $J[$L[0]] = $L[1]",
];

const C3: &[&str] = &[
    "$O = []\nfor $L in $I:\n    if $L in $J and $L not in $O:\n        $O.append($L)",
    "$O = []\nfor $L in $I:\n    if $L in $J:\n        if $L not in $O:\n            $O.append($L)",
    "$O = []\nfor $L in $I:\n    if $L not in $O and $L in $J:\n        $O.append($L)",
    "$O = []\nfor $L in range(len($I)):\n    if $I[$L] in $J and $I[$L] not in $O:\n        $O.append($I[$L])",
    "$O = []\nfor $L in $I:\n    if $L in $J and $L not in $O:\n        $O = $O + [$L]",
    "$O = []\nfor $L in $I:\n    if $L in $J and $L not in $O:\n        $O += [$L]",
    "$O = list(set($I).intersection($J))",
    "common = []\n$M = 0\nwhile $M < len($I):\n    if $I[$M] in $J and $I[$M] not in common:\n        common.append($I[$M])\n    $M += 1",
    "def shared_items(a, b):\n    return list(set(a).intersection(b))\ncommon = shared_items($I, $J)",
];

const C4: &[&str] = &[
    "for $L, $M in enumerate($I):\n    if $L != 0:\n        $J += \", \"\n    $J += $M",
    "for $L in range(len($I)):\n    if $L > 0:\n        $J += \", \"\n    $J += $I[$L]",
    "for $L, $M in enumerate($I):\n    if $L:\n        $J += \", \"\n    $J += $M",
    "for $L, $M in enumerate($I):\n    if $L != 0:\n        $J = $J + \", \"\n    $J = $J + $M",
    "for $L, $M in enumerate($I):\n    if $L == 0:\n        $J += $M\n    else:\n        $J += \", \" + $M",
    "for $L in range(len($I)):\n    if $L != 0:\n        $J += \", \"\n    $J += $I[$L]",
    "$M = \", \".join($I)\n$J += $M",
    "$M = \", \".join([$L for $L in $I])\n$J += $M",
    "$L = 0\nwhile $L < len($I):\n    if $L != 0:\n        $J += \", \"\n    $J += $I[$L]\n    $L += 1",
    "def joined($L):\n    return \", \".join($L)\n$M = joined($I)\n$J += $M",
];

const C5: &[&str] = &[
    "$O = {}\nfor $L in $I:\n    if $L in $O:\n        $O[$L].append($J($L))\n    else:\n        $O[$L] = [$J($L)]",
    "$O = {}\nfor $L in $I:\n    if $L not in $O:\n        $O[$L] = []\n    $O[$L].append($J($L))",
    "$O = {}\nfor $L in $I:\n    $M = $J($L)\n    if $L in $O:\n        $O[$L].append($M)\n    else:\n        $O[$L] = [$M]",
    "$O = {}\nfor $L in $I:\n    if $L in $O:\n        $O[$L] = $O[$L] + [$J($L)]\n    else:\n        $O[$L] = [$J($L)]",
    "$O = {}\nfor $L in $I:\n    if $L in $O.keys():\n        $O[$L].append($J($L))\n    else:\n        $O[$L] = [$J($L)]",
    "$O = {}\nfor $L in range(len($I)):\n    if $I[$L] in $O:\n        $O[$I[$L]].append($J($I[$L]))\n    else:\n        $O[$I[$L]] = [$J($I[$L])]",
    "$O = {}\nfor $L in $I:\n    $O.setdefault($L, []).append($J($L))",
    "$O = collections.defaultdict(list)\nfor $L in $I:\n    $O[$L].append($J($L))",
    "$O = {}\nfor $L in $I:\n    $O[$L] = $O.get($L, []) + [$J($L)]",
    "$O = {$L: [$J($M) for $M in $I if $M == $L] for $L in $I}",
];

const C6: &[&str] = &[
    "$O = {}\nfor $L in $I:\n    if $L not in $O:\n        $O[$L] = 0\n    $O[$L] += 1",
    "$O = {}\nfor $L in $I:\n    if $L in $O:\n        $O[$L] += 1\n    else:\n        $O[$L] = 1",
    "$O = {}\nfor $L in $I:\n    if $L not in $O:\n        $O[$L] = 1\n    else:\n        $O[$L] = $O[$L] + 1",
    "$O = {}\nfor $L in $I:\n    if $L in $O.keys():\n        $O[$L] += 1\n    else:\n        $O[$L] = 1",
    "$O = {}\nfor $L in range(len($I)):\n    if $I[$L] not in $O:\n        $O[$I[$L]] = 0\n    $O[$I[$L]] += 1",
    "$O = {}\nfor $L in $I:\n    if $L not in $O:\n        $O[$L] = $I.count($L)",
    "$O = collections.Counter($I)",
    "$O = {}\nfor $L in $I:\n    $O[$L] = $O.get($L, 0) + 1",
    "$O = {$L: $I.count($L) for $L in $I}",
    "$O = collections.defaultdict(int)\nfor $L in $I:\n    $O[$L] += 1",
    "def tally_of($L):\n    return collections.Counter($L)\ncounts = tally_of($I)",
];

const C7: &[&str] = &[
    "$O = []\nfor $L in range(len($I)):\n    $O.append(sum($I[:$L + 1]))",
    "cum_arr = []\n$M = 0\nfor $L in $I:\n    $M += $L\n    cum_arr.append($M)",
    "$O = []\nfor $L in range(len($I)):\n    if $L == 0:\n        $O.append($I[$L])\n    else:\n        $O.append($O[$L - 1] + $I[$L])",
    "$O = []\nfor $L in range(1, len($I) + 1):\n    $O.append(sum($I[:$L]))",
    "$O = []\nfor $L in range(len($I)):\n    $O.append(sum($I[0:$L + 1]))",
    "$O = []\nfor $L in range(len($I)):\n    $O += [sum($I[:$L + 1])]",
    "$O = numpy.cumsum($I)",
    "$O = list(itertools.accumulate($I))",
    "$O = [sum($I[:$L + 1]) for $L in range(len($I))]",
    "cum_arr = []\n$L = 0\nwhile $L < len($I):\n    cum_arr.append(sum($I[:$L + 1]))\n    $L += 1",
];

const C8: &[&str] = &[
    "$O = 0\nfor $L in range(len($I)):\n    $O += $I[$L] * $J[$L]",
    "$O = 0\nfor $L in range(len($I)):\n    $O = $O + $I[$L] * $J[$L]",
    "$O = 0\nfor $M, $L in zip($I, $J):\n    $O += $M * $L",
    "$O = 0\nfor $L in range(len($I)):\n    $O += $J[$L] * $I[$L]",
    "$O = 0\nfor $L, $M in enumerate($I):\n    $O += $M * $J[$L]",
    "$O = sum([$M * $L for $M, $L in zip($I, $J)])",
    "$O = numpy.dot($I, $J)",
    "$O = sum($I[$L] * $J[$L] for $L in range(len($I)))",
];

const C9: &[&str] = &[
    "$O = []\nfor $L in range(len($I)):\n    $O.append($I[$L] + $J[$L])",
    "$O = []\nfor $M, $L in zip($I, $J):\n    $O.append($M + $L)",
    "$O = []\nfor $L in range(len($I)):\n    $O += [$I[$L] + $J[$L]]",
    "$O = []\nfor $L in range(len($I)):\n    $O = $O + [$I[$L] + $J[$L]]",
    "$O = [$M + $L for $M, $L in zip($I, $J)]",
    "$O = numpy.add($I, $J)",
];

const C10: &[&str] = &[
    "$O = []\nfor $L in range(len($I)):\n    if $J($I[$L]):\n        $O.append($I[$L])",
    "$O = []\nfor $L in range(len($I)):\n    if $J($I[$L]):\n        $O += [$I[$L]]",
    "$O = []\nfor $L in range(len($I)):\n    $M = $I[$L]\n    if $J($M):\n        $O.append($M)",
    "$O = []\nfor $L in $I:\n    if $J($L):\n        $O.append($L)",
    "$O = []\nfor $L in $I:\n    if not $J($L):\n        continue\n    $O.append($L)",
    "$O = []\nfor $L in range(len($I)):\n    if $J($I[$L]):\n        $O = $O + [$I[$L]]",
    "$O = [$L for $L in $I if $J($L)]",
    "$O = [$I[$L] for $L in range(len($I)) if $J($I[$L])]",
];

const fn row(v: usize, v_c: usize, v_u: usize, v_a: usize, t1: usize, t2: usize) -> Row {
    Row { v, v_c, v_u, v_a, t1, t2 }
}

pub fn all() -> Vec<Def> {
    vec![
        Def {
            n: 1,
            lhs: "result = 0\nfor elem in elements:\n    result = elem + result",
            rhs: "result = numpy.sum(elements)",
            inputs: &[("elements", "List[int]")],
            output: "result",
            imports: &["numpy"],
            sink: 'O',
            out_kind: OutKind::Int,
            shapes: C1,
            pools: [('O', INT_OUT), ('I', LISTS), ('J', NONE), ('L', LOOP), ('M', AUX)],
            types: [('O', "int"), ('I', "List[int]"), ('J', "Any"), ('L', "int"), ('M', "int")],
            row: row(1185, 291, 83, 50, 17, 196),
            fp: 20,
        },
        Def {
            n: 2,
            lhs: "for k, v in add_dict.items():\n    d[k] = v",
            rhs: "d.update(add_dict)",
            inputs: &[("add_dict", "Dict[str, int]"), ("d", "Dict[str, int]")],
            output: "d",
            imports: &[],
            sink: 'J',
            out_kind: OutKind::Dict,
            shapes: C2,
            pools: [('O', NONE), ('I', DICT_SRC), ('J', DICT_DST), ('L', LOOP), ('M', AUX)],
            types: [('O', "Any"), ('I', "Dict[str, int]"), ('J', "Dict[str, int]"), ('L', "str"), ('M', "int")],
            row: row(1201, 478, 119, 110, 51, 201),
            fp: 30,
        },
        Def {
            n: 3,
            lhs: "common = []\nfor i in l1:\n    if i in l2 and i not in common:\n        common.append(i)",
            rhs: "common = list(set(l1).intersection(l2))",
            inputs: &[("l1", "List[int]"), ("l2", "List[int]")],
            output: "common",
            imports: &[],
            sink: 'O',
            out_kind: OutKind::List,
            shapes: C3,
            pools: [('O', LIST_OUT), ('I', LISTS), ('J', LISTS2), ('L', LOOP), ('M', AUX)],
            types: [('O', "List[int]"), ('I', "List[int]"), ('J', "List[int]"), ('L', "int"), ('M', "int")],
            row: row(782, 287, 107, 66, 10, 141),
            fp: 20,
        },
        Def {
            n: 4,
            lhs: "for idx, item in enumerate(values):\n    if idx != 0:\n        string += \", \"\n    string += item",
            rhs: "string += \", \".join(values)",
            inputs: &[("values", "List[str]"), ("string", "str")],
            output: "string",
            imports: &[],
            sink: 'J',
            out_kind: OutKind::Str,
            shapes: C4,
            pools: [('O', NONE), ('I', WORD_LISTS), ('J', STRS), ('L', LOOP), ('M', AUX)],
            types: [('O', "Any"), ('I', "List[str]"), ('J', "str"), ('L', "int"), ('M', "str")],
            row: row(285, 101, 20, 10, 2, 12),
            fp: 10,
        },
        Def {
            n: 5,
            lhs: "d = {}\nfor i in array:\n    if i in d:\n        d[i].append(f(i))\n    else:\n        d[i] = [f(i)]",
            rhs: "d = {}\nfor i in array:\n    d.setdefault(i, []).append(f(i))",
            inputs: &[("array", "List[int]"), ("f", "Callable")],
            output: "d",
            imports: &[],
            sink: 'O',
            out_kind: OutKind::Dict,
            shapes: C5,
            pools: [('O', DICT_OUT), ('I', LISTS), ('J', CALLS), ('L', LOOP), ('M', AUX)],
            types: [('O', "Dict[int, List[int]]"), ('I', "List[int]"), ('J', "Callable"), ('L', "int"), ('M', "int")],
            row: row(1265, 416, 150, 75, 9, 125),
            fp: 30,
        },
        Def {
            n: 6,
            lhs: "counts = {}\nfor i in iterable:\n    if i not in counts:\n        counts[i] = 0\n    counts[i] += 1",
            rhs: "counts = collections.Counter(iterable)",
            inputs: &[("iterable", "List[int]")],
            output: "counts",
            imports: &["collections"],
            sink: 'O',
            out_kind: OutKind::Dict,
            shapes: C6,
            pools: [('O', DICT_OUT), ('I', LISTS), ('J', NONE), ('L', LOOP), ('M', AUX)],
            types: [('O', "Dict[int, int]"), ('I', "List[int]"), ('J', "Any"), ('L', "int"), ('M', "int")],
            row: row(927, 425, 202, 85, 11, 106),
            fp: 25,
        },
        Def {
            n: 7,
            lhs: "cum_arr = []\nfor i in range(len(array)):\n    cum_arr.append(sum(array[:i+1]))",
            rhs: "cum_arr = numpy.cumsum(array)",
            inputs: &[("array", "List[int]")],
            output: "cum_arr",
            imports: &["numpy"],
            sink: 'O',
            out_kind: OutKind::List,
            shapes: C7,
            pools: [('O', LIST_OUT), ('I', LISTS), ('J', NONE), ('L', LOOP), ('M', AUX)],
            types: [('O', "List[int]"), ('I', "List[int]"), ('J', "Any"), ('L', "int"), ('M', "int")],
            row: row(1223, 290, 95, 80, 3, 68),
            fp: 20,
        },
        Def {
            n: 8,
            lhs: "dot_prod = 0\nfor i in range(len(arr1)):\n    dot_prod += arr1[i] * arr2[i]",
            rhs: "dot_prod = numpy.dot(arr1, arr2)",
            inputs: &[("arr1", "List[int]"), ("arr2", "List[int]")],
            output: "dot_prod",
            imports: &["numpy"],
            sink: 'O',
            out_kind: OutKind::Int,
            shapes: C8,
            pools: [('O', INT_OUT), ('I', LISTS), ('J', LISTS2), ('L', LOOP), ('M', AUX)],
            types: [('O', "int"), ('I', "List[int]"), ('J', "List[int]"), ('L', "int"), ('M', "int")],
            row: row(177, 28, 26, 24, 16, 208),
            fp: 0,
        },
        Def {
            n: 9,
            lhs: "result = []\nfor i in range(len(array1)):\n    result.append(array1[i] + array2[i])",
            rhs: "result = numpy.add(array1, array2)",
            inputs: &[("array1", "List[int]"), ("array2", "List[int]")],
            output: "result",
            imports: &["numpy"],
            sink: 'O',
            out_kind: OutKind::List,
            shapes: C9,
            pools: [('O', LIST_OUT), ('I', LISTS), ('J', LISTS2), ('L', LOOP), ('M', AUX)],
            types: [('O', "List[int]"), ('I', "List[int]"), ('J', "List[int]"), ('L', "int"), ('M', "int")],
            row: row(64, 11, 11, 9, 5, 36),
            fp: 0,
        },
        Def {
            n: 10,
            lhs: "t = []\nfor i in range(len(elem)):\n    if cond(elem[i]):\n        t.append(elem[i])",
            rhs: "t = [elem[i] for i in range(len(elem)) if cond(elem[i])]",
            inputs: &[("elem", "List[int]"), ("cond", "Callable")],
            output: "t",
            imports: &[],
            sink: 'O',
            out_kind: OutKind::List,
            shapes: C10,
            pools: [('O', LIST_OUT), ('I', LISTS), ('J', PREDS), ('L', LOOP), ('M', AUX)],
            types: [('O', "List[int]"), ('I', "List[int]"), ('J', "Callable"), ('L', "int"), ('M', "int")],
            row: row(955, 453, 226, 71, 23, 907),
            fp: 25,
        },
    ]
}

/// Replaces placeholders. Roles missing from `names` are left alone.
pub fn instantiate(shape: &str, names: &BTreeMap<char, String>) -> String {
    let mut out = shape.to_string();
    for (role, name) in names {
        out = out.replace(&format!("${}", role), name);
    }
    out
}

/// Roles a shape mentions.
pub fn roles(shape: &str) -> Vec<char> {
    ['O', 'I', 'J', 'L', 'M']
        .into_iter()
        .filter(|r| shape.contains(&format!("${}", r)))
        .collect()
}
