use std::cmp::Ordering;

use super::value::{Dict, SetItems};
use super::{int_arg, Exc, Interp, Value, R};
use crate::syntax::BinOpKind;

const BUILTINS: &[&str] = &[
    "abs", "all", "any", "bool", "dict", "divmod", "enumerate", "filter", "float", "int", "isinstance",
    "len", "list", "map", "max", "min", "print", "range", "reversed", "round", "set", "sorted", "str",
    "sum", "tuple", "zip", "chr", "ord", "pow",
];

const MODULE_FUNCS: &[&str] = &[
    "numpy.sum", "numpy.cumsum", "numpy.dot", "numpy.add", "numpy.array", "numpy.zeros", "numpy.mean",
    "numpy.multiply", "numpy.prod",
    "collections.Counter", "collections.defaultdict",
    "math.fsum", "math.sqrt", "math.floor", "math.ceil", "math.prod",
    "functools.reduce",
    "itertools.accumulate", "itertools.chain",
    "operator.add", "operator.mul",
];

pub fn builtin(name: &str) -> Option<Value> {
    BUILTINS.iter().find(|b| **b == name).map(|b| Value::Builtin(b))
}

pub fn module_attr(module: &str, attr: &str) -> R<Value> {
    let full = format!("{}.{}", module, attr);
    MODULE_FUNCS
        .iter()
        .find(|f| **f == full)
        .map(|f| Value::Builtin(f))
        .ok_or_else(|| Exc::new("AttributeError", format!("module '{}' has no attribute '{}'", module, attr)))
}

const LIST_METHODS: &[&str] = &[
    "append", "extend", "insert", "pop", "remove", "index", "count", "sort", "reverse", "copy", "clear",
];
const DICT_METHODS: &[&str] = &[
    "get", "setdefault", "items", "keys", "values", "update", "pop", "copy", "clear", "most_common",
];
const STR_METHODS: &[&str] = &[
    "join", "split", "strip", "lstrip", "rstrip", "upper", "lower", "startswith", "endswith", "replace",
    "find", "count", "isdigit",
];
const SET_METHODS: &[&str] = &[
    "add", "update", "intersection", "union", "difference", "discard", "remove", "issubset", "copy",
];

pub fn has_method(v: &Value, name: &str) -> bool {
    let table = match v {
        Value::List(_) => LIST_METHODS,
        Value::Dict(_) => DICT_METHODS,
        Value::Str(_) => STR_METHODS,
        Value::Set(_) => SET_METHODS,
        _ => return false,
    };
    table.contains(&name)
}

fn arity(name: &str, args: &[Value], lo: usize, hi: usize) -> R<()> {
    if args.len() < lo || args.len() > hi {
        return Err(Exc::new(
            "TypeError",
            format!("{}() takes {} to {} arguments ({} given)", name, lo, hi, args.len()),
        ));
    }
    Ok(())
}

fn kw(kwargs: &[(String, Value)], name: &str) -> Option<Value> {
    kwargs.iter().find(|(k, _)| k == name).map(|(_, v)| v.clone())
}

fn no_kwargs(name: &str, kwargs: &[(String, Value)], allowed: &[&str]) -> R<()> {
    match kwargs.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        Some((k, _)) => Err(Exc::new(
            "TypeError",
            format!("{}() got an unexpected keyword argument '{}'", name, k),
        )),
        None => Ok(()),
    }
}

fn sum_values(it: &mut Interp, items: &[Value], start: Value) -> R<Value> {
    let mut acc = start;
    for v in items {
        acc = it.binop(BinOpKind::Add, &acc, v)?;
    }
    Ok(acc)
}

fn sort_values(it: &mut Interp, items: &mut Vec<Value>, key: Option<Value>, reverse: bool) -> R<()> {
    let keys: Vec<Value> = match &key {
        Some(Value::None) | None => items.clone(),
        Some(f) => {
            let mut ks = Vec::with_capacity(items.len());
            for v in items.iter() {
                ks.push(it.call(f, vec![v.clone()], Vec::new())?);
            }
            ks
        }
    };
    it.tick(items.len() as u64)?;
    let mut idx: Vec<usize> = (0..items.len()).collect();
    let mut err = None;
    idx.sort_by(|a, b| {
        let o = keys[*a].py_cmp(&keys[*b]).unwrap_or_else(|e| {
            err.get_or_insert(e);
            Ordering::Equal
        });
        if reverse { o.reverse() } else { o }
    });
    if let Some(e) = err {
        return Err(e);
    }
    *items = idx.into_iter().map(|i| items[i].clone()).collect();
    Ok(())
}

fn extreme(it: &mut Interp, name: &str, args: Vec<Value>, kwargs: &[(String, Value)], want: Ordering) -> R<Value> {
    no_kwargs(name, kwargs, &["key", "default"])?;
    let items = if args.len() == 1 {
        it.iterate(&args[0])?
    } else {
        args
    };
    if items.is_empty() {
        return kw(kwargs, "default")
            .ok_or_else(|| Exc::new("ValueError", format!("{}() arg is an empty sequence", name)));
    }
    let key = kw(kwargs, "key");
    let mut best = items[0].clone();
    let mut best_k = match &key {
        Some(f) => it.call(f, vec![best.clone()], Vec::new())?,
        None => best.clone(),
    };
    for v in &items[1..] {
        let k = match &key {
            Some(f) => it.call(f, vec![v.clone()], Vec::new())?,
            None => v.clone(),
        };
        if k.py_cmp(&best_k)? == want {
            best = v.clone();
            best_k = k;
        }
    }
    Ok(best)
}

fn to_set(it: &mut Interp, v: &Value) -> R<SetItems> {
    let mut s = SetItems::default();
    for x in it.iterate(v)? {
        s.insert(x.key()?, x);
    }
    Ok(s)
}

fn numbers(it: &mut Interp, v: &Value) -> R<Vec<Value>> {
    let items = it.iterate(v)?;
    for x in &items {
        if !matches!(x, Value::Int(_) | Value::Float(_) | Value::Bool(_)) {
            return Err(Exc::new("TypeError", format!("unsupported operand type: '{}'", x.type_name())));
        }
    }
    Ok(items)
}

fn elementwise(it: &mut Interp, a: &Value, b: &Value, op: BinOpKind) -> R<Value> {
    let (xs, ys) = (numbers(it, a)?, numbers(it, b)?);
    if xs.len() != ys.len() {
        return Err(Exc::new("ValueError", "operands could not be broadcast together"));
    }
    let mut out = Vec::with_capacity(xs.len());
    for (x, y) in xs.iter().zip(&ys) {
        out.push(it.binop(op, x, y)?);
    }
    it.alloc(out.len())?;
    Ok(Value::list(out))
}

fn counter_from(it: &mut Interp, v: Option<&Value>) -> R<Value> {
    let mut d = Dict {
        counter: true,
        ..Dict::default()
    };
    if let Some(src) = v {
        for x in it.iterate(src)? {
            let k = x.key()?;
            let n = match d.items.get(&k) {
                Some((_, Value::Int(n))) => *n,
                _ => 0,
            };
            d.items.insert(k, (x, Value::Int(n + 1)));
        }
    }
    it.alloc(d.items.len())?;
    Ok(Value::dict(d))
}

pub fn call(it: &mut Interp, name: &str, args: Vec<Value>, kwargs: Vec<(String, Value)>) -> R<Value> {
    let a = &args;
    if !matches!(name, "sorted" | "max" | "min" | "print") {
        no_kwargs(name, &kwargs, &[])?;
    }
    match name {
        "len" => {
            arity(name, a, 1, 1)?;
            let n = match &a[0] {
                Value::Str(s) => s.chars().count(),
                Value::List(l) => l.borrow().len(),
                Value::Tuple(t) => t.len(),
                Value::Dict(d) => d.borrow().items.len(),
                Value::Set(s) => s.borrow().len(),
                other => {
                    return Err(Exc::new(
                        "TypeError",
                        format!("object of type '{}' has no len()", other.type_name()),
                    ))
                }
            };
            Ok(Value::Int(n as i64))
        }
        "range" => {
            arity(name, a, 1, 3)?;
            let (start, stop, step) = match a.len() {
                1 => (0, int_arg(&a[0])?, 1),
                2 => (int_arg(&a[0])?, int_arg(&a[1])?, 1),
                _ => (int_arg(&a[0])?, int_arg(&a[1])?, int_arg(&a[2])?),
            };
            if step == 0 {
                return Err(Exc::new("ValueError", "range() arg 3 must not be zero"));
            }
            let n = if step > 0 {
                (stop - start + step - 1).max(0) / step
            } else {
                (start - stop - step - 1).max(0) / -step
            };
            it.alloc(n as usize)?;
            Ok(Value::list((0..n).map(|k| Value::Int(start + k * step)).collect()))
        }
        "enumerate" => {
            arity(name, a, 1, 2)?;
            let start = if a.len() == 2 { int_arg(&a[1])? } else { 0 };
            let items = it.iterate(&a[0])?;
            it.alloc(items.len())?;
            Ok(Value::list(
                items
                    .into_iter()
                    .enumerate()
                    .map(|(i, v)| Value::tuple(vec![Value::Int(start + i as i64), v]))
                    .collect(),
            ))
        }
        "zip" => {
            let mut cols = Vec::new();
            for x in a {
                cols.push(it.iterate(x)?);
            }
            let n = cols.iter().map(|c| c.len()).min().unwrap_or(0);
            it.alloc(n)?;
            Ok(Value::list(
                (0..n)
                    .map(|i| Value::tuple(cols.iter().map(|c| c[i].clone()).collect()))
                    .collect(),
            ))
        }
        "sum" => {
            arity(name, a, 1, 2)?;
            let items = it.iterate(&a[0])?;
            let start = a.get(1).cloned().unwrap_or(Value::Int(0));
            if matches!(start, Value::Str(_)) {
                return Err(Exc::new("TypeError", "sum() can't sum strings [use ''.join(seq) instead]"));
            }
            sum_values(it, &items, start)
        }
        "min" => extreme(it, name, args, &kwargs, Ordering::Less),
        "max" => extreme(it, name, args, &kwargs, Ordering::Greater),
        "sorted" => {
            arity(name, a, 1, 1)?;
            no_kwargs(name, &kwargs, &["key", "reverse"])?;
            let mut items = it.iterate(&a[0])?;
            let rev = kw(&kwargs, "reverse").map(|v| v.truthy()).unwrap_or(false);
            sort_values(it, &mut items, kw(&kwargs, "key"), rev)?;
            it.alloc(items.len())?;
            Ok(Value::list(items))
        }
        "reversed" => {
            arity(name, a, 1, 1)?;
            let mut items = it.iterate(&a[0])?;
            items.reverse();
            Ok(Value::list(items))
        }
        "list" => {
            arity(name, a, 0, 1)?;
            let items = match a.first() {
                Some(v) => it.iterate(v)?,
                None => Vec::new(),
            };
            it.alloc(items.len())?;
            Ok(Value::list(items))
        }
        "tuple" => {
            arity(name, a, 0, 1)?;
            let items = match a.first() {
                Some(v) => it.iterate(v)?,
                None => Vec::new(),
            };
            Ok(Value::tuple(items))
        }
        "set" => {
            arity(name, a, 0, 1)?;
            let s = match a.first() {
                Some(v) => to_set(it, v)?,
                None => SetItems::default(),
            };
            it.alloc(s.len())?;
            Ok(Value::set(s))
        }
        "dict" => {
            arity(name, a, 0, 1)?;
            let mut d = Dict::default();
            if let Some(src) = a.first() {
                if let Value::Dict(s) = src {
                    d.items = s.borrow().items.clone();
                } else {
                    for pair in it.iterate(src)? {
                        let kv = it.iterate(&pair)?;
                        if kv.len() != 2 {
                            return Err(Exc::new("ValueError", "dictionary update sequence element has wrong length"));
                        }
                        d.items.insert(kv[0].key()?, (kv[0].clone(), kv[1].clone()));
                    }
                }
            }
            it.alloc(d.items.len())?;
            Ok(Value::dict(d))
        }
        "str" => {
            arity(name, a, 0, 1)?;
            Ok(Value::str(&a.first().map(|v| v.to_str()).unwrap_or_default()))
        }
        "int" => {
            arity(name, a, 0, 1)?;
            match a.first() {
                None => Ok(Value::Int(0)),
                Some(Value::Int(i)) => Ok(Value::Int(*i)),
                Some(Value::Bool(b)) => Ok(Value::Int(*b as i64)),
                Some(Value::Float(f)) if f.is_finite() => Ok(Value::Int(f.trunc() as i64)),
                Some(Value::Str(s)) => s
                    .trim()
                    .parse()
                    .map(Value::Int)
                    .map_err(|_| Exc::new("ValueError", format!("invalid literal for int(): {:?}", s))),
                Some(v) => Err(Exc::new("TypeError", format!("int() argument must be a number, not '{}'", v.type_name()))),
            }
        }
        "float" => {
            arity(name, a, 0, 1)?;
            match a.first() {
                None => Ok(Value::Float(0.0)),
                Some(Value::Int(i)) => Ok(Value::Float(*i as f64)),
                Some(Value::Bool(b)) => Ok(Value::Float(*b as i64 as f64)),
                Some(Value::Float(f)) => Ok(Value::Float(*f)),
                Some(Value::Str(s)) => s
                    .trim()
                    .parse()
                    .map(Value::Float)
                    .map_err(|_| Exc::new("ValueError", format!("could not convert string to float: {:?}", s))),
                Some(v) => Err(Exc::new("TypeError", format!("float() argument must be a number, not '{}'", v.type_name()))),
            }
        }
        "bool" => {
            arity(name, a, 0, 1)?;
            Ok(Value::Bool(a.first().map(|v| v.truthy()).unwrap_or(false)))
        }
        "abs" => {
            arity(name, a, 1, 1)?;
            match &a[0] {
                Value::Int(i) => Ok(Value::Int(i.checked_abs().ok_or_else(|| Exc::new("OverflowError", "abs"))?)),
                Value::Bool(b) => Ok(Value::Int(*b as i64)),
                Value::Float(f) => Ok(Value::Float(f.abs())),
                v => Err(Exc::new("TypeError", format!("bad operand type for abs(): '{}'", v.type_name()))),
            }
        }
        "any" | "all" => {
            arity(name, a, 1, 1)?;
            let items = it.iterate(&a[0])?;
            Ok(Value::Bool(if name == "any" {
                items.iter().any(|v| v.truthy())
            } else {
                items.iter().all(|v| v.truthy())
            }))
        }
        "map" => {
            arity(name, a, 2, 2)?;
            let items = it.iterate(&a[1])?;
            let mut out = Vec::with_capacity(items.len());
            for v in items {
                out.push(it.call(&a[0], vec![v], Vec::new())?);
            }
            it.alloc(out.len())?;
            Ok(Value::list(out))
        }
        "filter" => {
            arity(name, a, 2, 2)?;
            let items = it.iterate(&a[1])?;
            let mut out = Vec::new();
            for v in items {
                let keep = match &a[0] {
                    Value::None => v.truthy(),
                    f => it.call(f, vec![v.clone()], Vec::new())?.truthy(),
                };
                if keep {
                    out.push(v);
                }
            }
            it.alloc(out.len())?;
            Ok(Value::list(out))
        }
        "isinstance" => {
            arity(name, a, 2, 2)?;
            let types = match &a[1] {
                Value::Tuple(t) => t.to_vec(),
                v => vec![v.clone()],
            };
            let tn = a[0].type_name();
            Ok(Value::Bool(types.iter().any(|t| match t {
                Value::Builtin(b) => *b == tn || (*b == "int" && tn == "bool") || (*b == "dict" && tn == "Counter"),
                _ => false,
            })))
        }
        "print" => Ok(Value::None),
        "round" => {
            arity(name, a, 1, 2)?;
            match (&a[0], a.get(1)) {
                (Value::Float(f), None) => {
                    let r = f.round();
                    // banker's rounding on exact halves
                    let r = if (f - f.trunc()).abs() == 0.5 && r % 2.0 != 0.0 { r - f.signum() } else { r };
                    Ok(Value::Int(r as i64))
                }
                (Value::Float(f), Some(n)) => {
                    let p = 10f64.powi(int_arg(n)? as i32);
                    Ok(Value::Float((f * p).round() / p))
                }
                (Value::Int(i), _) => Ok(Value::Int(*i)),
                (v, _) => Err(Exc::new("TypeError", format!("type {} doesn't define __round__", v.type_name()))),
            }
        }
        "divmod" => {
            arity(name, a, 2, 2)?;
            let q = it.binop(BinOpKind::FloorDiv, &a[0], &a[1])?;
            let r = it.binop(BinOpKind::Mod, &a[0], &a[1])?;
            Ok(Value::tuple(vec![q, r]))
        }
        "pow" => {
            arity(name, a, 2, 2)?;
            it.binop(BinOpKind::Pow, &a[0], &a[1])
        }
        "chr" => {
            arity(name, a, 1, 1)?;
            let c = char::from_u32(int_arg(&a[0])? as u32).ok_or_else(|| Exc::new("ValueError", "chr() arg not in range"))?;
            Ok(Value::str(&c.to_string()))
        }
        "ord" => {
            arity(name, a, 1, 1)?;
            match &a[0] {
                Value::Str(s) if s.chars().count() == 1 => Ok(Value::Int(s.chars().next().unwrap() as i64)),
                _ => Err(Exc::new("TypeError", "ord() expected a character")),
            }
        }
        "numpy.sum" | "math.fsum" => {
            arity(name, a, 1, 1)?;
            let items = numbers(it, &a[0])?;
            let s = sum_values(it, &items, Value::Int(0))?;
            Ok(if name == "math.fsum" { Value::Float(as_f64(&s)) } else { s })
        }
        "numpy.prod" | "math.prod" => {
            arity(name, a, 1, 1)?;
            let items = numbers(it, &a[0])?;
            let mut acc = Value::Int(1);
            for v in &items {
                acc = it.binop(BinOpKind::Mul, &acc, v)?;
            }
            Ok(acc)
        }
        "numpy.mean" => {
            arity(name, a, 1, 1)?;
            let items = numbers(it, &a[0])?;
            if items.is_empty() {
                return Ok(Value::Float(f64::NAN));
            }
            let s = sum_values(it, &items, Value::Int(0))?;
            Ok(Value::Float(as_f64(&s) / items.len() as f64))
        }
        "numpy.cumsum" | "itertools.accumulate" => {
            arity(name, a, 1, 2)?;
            let items = if name == "numpy.cumsum" { numbers(it, &a[0])? } else { it.iterate(&a[0])? };
            let mut out = Vec::with_capacity(items.len());
            let mut acc: Option<Value> = None;
            for v in items {
                let next = match (acc, a.get(1)) {
                    (None, _) => v,
                    (Some(p), Some(f)) => it.call(f, vec![p, v], Vec::new())?,
                    (Some(p), None) => it.binop(BinOpKind::Add, &p, &v)?,
                };
                out.push(next.clone());
                acc = Some(next);
            }
            it.alloc(out.len())?;
            Ok(Value::list(out))
        }
        "numpy.dot" => {
            arity(name, a, 2, 2)?;
            let prod = elementwise(it, &a[0], &a[1], BinOpKind::Mul)?;
            let items = it.iterate(&prod)?;
            sum_values(it, &items, Value::Int(0))
        }
        "numpy.add" => {
            arity(name, a, 2, 2)?;
            elementwise(it, &a[0], &a[1], BinOpKind::Add)
        }
        "numpy.multiply" => {
            arity(name, a, 2, 2)?;
            elementwise(it, &a[0], &a[1], BinOpKind::Mul)
        }
        "numpy.array" => {
            arity(name, a, 1, 1)?;
            let items = it.iterate(&a[0])?;
            it.alloc(items.len())?;
            Ok(Value::list(items))
        }
        "numpy.zeros" => {
            arity(name, a, 1, 1)?;
            let n = int_arg(&a[0])?.max(0) as usize;
            it.alloc(n)?;
            Ok(Value::list(vec![Value::Float(0.0); n]))
        }
        "collections.Counter" => {
            arity(name, a, 0, 1)?;
            counter_from(it, a.first())
        }
        "collections.defaultdict" => {
            arity(name, a, 0, 1)?;
            Ok(Value::dict(Dict {
                default_factory: a.first().cloned().filter(|v| !matches!(v, Value::None)),
                ..Dict::default()
            }))
        }
        "math.sqrt" => {
            arity(name, a, 1, 1)?;
            let x = as_num(&a[0])?;
            if x < 0.0 {
                return Err(Exc::new("ValueError", "math domain error"));
            }
            Ok(Value::Float(x.sqrt()))
        }
        "math.floor" | "math.ceil" => {
            arity(name, a, 1, 1)?;
            let x = as_num(&a[0])?;
            Ok(Value::Int(if name == "math.floor" { x.floor() } else { x.ceil() } as i64))
        }
        "functools.reduce" => {
            arity(name, a, 2, 3)?;
            let items = it.iterate(&a[1])?;
            let mut iter = items.into_iter();
            let mut acc = match a.get(2) {
                Some(v) => v.clone(),
                None => iter
                    .next()
                    .ok_or_else(|| Exc::new("TypeError", "reduce() of empty iterable with no initial value"))?,
            };
            for v in iter {
                acc = it.call(&a[0], vec![acc, v], Vec::new())?;
            }
            Ok(acc)
        }
        "itertools.chain" => {
            let mut out = Vec::new();
            for x in a {
                out.extend(it.iterate(x)?);
            }
            it.alloc(out.len())?;
            Ok(Value::list(out))
        }
        "operator.add" | "operator.mul" => {
            arity(name, a, 2, 2)?;
            let op = if name == "operator.add" { BinOpKind::Add } else { BinOpKind::Mul };
            it.binop(op, &a[0], &a[1])
        }
        _ => Err(Exc::new("TypeError", format!("'{}' is not callable here", name))),
    }
}

fn as_num(v: &Value) -> R<f64> {
    match v {
        Value::Int(i) => Ok(*i as f64),
        Value::Bool(b) => Ok(*b as i64 as f64),
        Value::Float(f) => Ok(*f),
        other => Err(Exc::new("TypeError", format!("must be real number, not {}", other.type_name()))),
    }
}

fn as_f64(v: &Value) -> f64 {
    as_num(v).unwrap_or(f64::NAN)
}

pub fn call_method(it: &mut Interp, recv: &Value, name: &str, args: Vec<Value>, kwargs: Vec<(String, Value)>) -> R<Value> {
    if !(name == "sort" && matches!(recv, Value::List(_))) {
        no_kwargs(name, &kwargs, &[])?;
    }
    let a = &args;
    match recv {
        Value::List(l) => match name {
            "append" => {
                arity(name, a, 1, 1)?;
                it.alloc(1)?;
                l.borrow_mut().push(a[0].clone());
                Ok(Value::None)
            }
            "extend" => {
                arity(name, a, 1, 1)?;
                let items = it.iterate(&a[0])?;
                it.alloc(items.len())?;
                l.borrow_mut().extend(items);
                Ok(Value::None)
            }
            "insert" => {
                arity(name, a, 2, 2)?;
                let mut v = l.borrow_mut();
                let n = v.len() as i64;
                let mut i = int_arg(&a[0])?;
                if i < 0 {
                    i += n;
                }
                v.insert(i.clamp(0, n) as usize, a[1].clone());
                Ok(Value::None)
            }
            "pop" => {
                arity(name, a, 0, 1)?;
                let mut v = l.borrow_mut();
                if v.is_empty() {
                    return Err(Exc::new("IndexError", "pop from empty list"));
                }
                let n = v.len() as i64;
                let mut i = match a.first() {
                    Some(x) => int_arg(x)?,
                    None => n - 1,
                };
                if i < 0 {
                    i += n;
                }
                if i < 0 || i >= n {
                    return Err(Exc::new("IndexError", "pop index out of range"));
                }
                Ok(v.remove(i as usize))
            }
            "remove" | "index" => {
                arity(name, a, 1, 1)?;
                let pos = l.borrow().iter().position(|x| x.py_eq(&a[0]));
                match pos {
                    Some(p) if name == "remove" => {
                        l.borrow_mut().remove(p);
                        Ok(Value::None)
                    }
                    Some(p) => Ok(Value::Int(p as i64)),
                    None => Err(Exc::new("ValueError", "list.index(x): x not in list")),
                }
            }
            "count" => {
                arity(name, a, 1, 1)?;
                Ok(Value::Int(l.borrow().iter().filter(|x| x.py_eq(&a[0])).count() as i64))
            }
            "sort" => {
                arity(name, a, 0, 0)?;
                no_kwargs(name, &kwargs, &["key", "reverse"])?;
                let mut items = l.borrow().clone();
                let rev = kw(&kwargs, "reverse").map(|v| v.truthy()).unwrap_or(false);
                sort_values(it, &mut items, kw(&kwargs, "key"), rev)?;
                *l.borrow_mut() = items;
                Ok(Value::None)
            }
            "reverse" => {
                l.borrow_mut().reverse();
                Ok(Value::None)
            }
            "copy" => {
                let v = l.borrow().clone();
                it.alloc(v.len())?;
                Ok(Value::list(v))
            }
            "clear" => {
                l.borrow_mut().clear();
                Ok(Value::None)
            }
            _ => unreachable!(),
        },
        Value::Dict(d) => match name {
            "get" => {
                arity(name, a, 1, 2)?;
                let k = a[0].key()?;
                Ok(d.borrow()
                    .items
                    .get(&k)
                    .map(|(_, v)| v.clone())
                    .unwrap_or_else(|| a.get(1).cloned().unwrap_or(Value::None)))
            }
            "setdefault" => {
                arity(name, a, 1, 2)?;
                let k = a[0].key()?;
                let existing = d.borrow().items.get(&k).map(|(_, v)| v.clone());
                match existing {
                    Some(v) => Ok(v),
                    None => {
                        let v = a.get(1).cloned().unwrap_or(Value::None);
                        it.alloc(1)?;
                        d.borrow_mut().items.insert(k, (a[0].clone(), v.clone()));
                        Ok(v)
                    }
                }
            }
            "items" | "keys" | "values" => {
                let d = d.borrow();
                let out: Vec<Value> = d
                    .items
                    .values()
                    .map(|(k, v)| match name {
                        "items" => Value::tuple(vec![k.clone(), v.clone()]),
                        "keys" => k.clone(),
                        _ => v.clone(),
                    })
                    .collect();
                it.tick(out.len() as u64)?;
                Ok(Value::list(out))
            }
            "update" => {
                arity(name, a, 1, 1)?;
                let pairs: Vec<(Value, Value)> = match &a[0] {
                    Value::Dict(s) => s.borrow().items.values().cloned().collect(),
                    other => {
                        let mut out = Vec::new();
                        for p in it.iterate(other)? {
                            let kv = it.iterate(&p)?;
                            if kv.len() != 2 {
                                return Err(Exc::new("ValueError", "dictionary update sequence element has wrong length"));
                            }
                            out.push((kv[0].clone(), kv[1].clone()));
                        }
                        out
                    }
                };
                it.alloc(pairs.len())?;
                let counter = d.borrow().counter;
                for (k, v) in pairs {
                    let key = k.key()?;
                    let v = if counter {
                        let cur = d.borrow().items.get(&key).map(|(_, c)| c.clone()).unwrap_or(Value::Int(0));
                        it.binop(BinOpKind::Add, &cur, &v)?
                    } else {
                        v
                    };
                    d.borrow_mut().items.insert(key, (k, v));
                }
                Ok(Value::None)
            }
            "pop" => {
                arity(name, a, 1, 2)?;
                let k = a[0].key()?;
                let removed = d.borrow_mut().items.shift_remove(&k);
                match (removed, a.get(1)) {
                    (Some((_, v)), _) => Ok(v),
                    (None, Some(dflt)) => Ok(dflt.clone()),
                    (None, None) => Err(Exc::new("KeyError", a[0].repr())),
                }
            }
            "copy" => {
                let c = d.borrow().clone();
                it.alloc(c.items.len())?;
                Ok(Value::dict(c))
            }
            "clear" => {
                d.borrow_mut().items.clear();
                Ok(Value::None)
            }
            "most_common" => {
                let mut items: Vec<Value> = d
                    .borrow()
                    .items
                    .values()
                    .map(|(k, v)| Value::tuple(vec![k.clone(), v.clone()]))
                    .collect();
                let mut err = None;
                // stable sort by count, descending
                items.sort_by(|x, y| {
                    let (Value::Tuple(x), Value::Tuple(y)) = (x, y) else { return Ordering::Equal };
                    y[1].py_cmp(&x[1]).unwrap_or_else(|e| {
                        err.get_or_insert(e);
                        Ordering::Equal
                    })
                });
                if let Some(e) = err {
                    return Err(e);
                }
                if let Some(n) = a.first() {
                    items.truncate(int_arg(n)?.max(0) as usize);
                }
                Ok(Value::list(items))
            }
            _ => unreachable!(),
        },
        Value::Str(s) => str_method(it, s, name, a),
        Value::Set(s) => match name {
            "add" => {
                arity(name, a, 1, 1)?;
                it.alloc(1)?;
                s.borrow_mut().insert(a[0].key()?, a[0].clone());
                Ok(Value::None)
            }
            "update" => {
                arity(name, a, 1, 1)?;
                let other = to_set(it, &a[0])?;
                it.alloc(other.len())?;
                s.borrow_mut().extend(other);
                Ok(Value::None)
            }
            "intersection" | "union" | "difference" => {
                arity(name, a, 1, 1)?;
                let other = to_set(it, &a[0])?;
                let mine = s.borrow().clone();
                let out: SetItems = match name {
                    "intersection" => mine.into_iter().filter(|(k, _)| other.contains_key(k)).collect(),
                    "difference" => mine.into_iter().filter(|(k, _)| !other.contains_key(k)).collect(),
                    _ => mine.into_iter().chain(other).collect(),
                };
                it.alloc(out.len())?;
                Ok(Value::set(out))
            }
            "discard" | "remove" => {
                arity(name, a, 1, 1)?;
                let gone = s.borrow_mut().shift_remove(&a[0].key()?);
                if gone.is_none() && name == "remove" {
                    return Err(Exc::new("KeyError", a[0].repr()));
                }
                Ok(Value::None)
            }
            "issubset" => {
                arity(name, a, 1, 1)?;
                let other = to_set(it, &a[0])?;
                Ok(Value::Bool(s.borrow().keys().all(|k| other.contains_key(k))))
            }
            "copy" => Ok(Value::set(s.borrow().clone())),
            _ => unreachable!(),
        },
        _ => unreachable!(),
    }
}

fn str_method(it: &mut Interp, s: &str, name: &str, a: &[Value]) -> R<Value> {
    let str_arg = |i: usize| -> R<String> {
        match a.get(i) {
            Some(Value::Str(x)) => Ok(x.to_string()),
            Some(v) => Err(Exc::new("TypeError", format!("must be str, not {}", v.type_name()))),
            None => Err(Exc::new("TypeError", format!("{}() missing argument", name))),
        }
    };
    match name {
        "join" => {
            arity(name, a, 1, 1)?;
            let items = it.iterate(&a[0])?;
            let mut parts = Vec::with_capacity(items.len());
            for v in items {
                match v {
                    Value::Str(x) => parts.push(x.to_string()),
                    other => {
                        return Err(Exc::new(
                            "TypeError",
                            format!("sequence item: expected str instance, {} found", other.type_name()),
                        ))
                    }
                }
            }
            Ok(Value::str(&parts.join(s)))
        }
        "split" => {
            arity(name, a, 0, 1)?;
            let parts: Vec<Value> = match a.first() {
                None | Some(Value::None) => s.split_whitespace().map(Value::str).collect(),
                Some(_) => {
                    let sep = str_arg(0)?;
                    if sep.is_empty() {
                        return Err(Exc::new("ValueError", "empty separator"));
                    }
                    s.split(sep.as_str()).map(Value::str).collect()
                }
            };
            it.alloc(parts.len())?;
            Ok(Value::list(parts))
        }
        "strip" | "lstrip" | "rstrip" => {
            arity(name, a, 0, 0)?;
            Ok(Value::str(match name {
                "strip" => s.trim(),
                "lstrip" => s.trim_start(),
                _ => s.trim_end(),
            }))
        }
        "upper" => Ok(Value::str(&s.to_uppercase())),
        "lower" => Ok(Value::str(&s.to_lowercase())),
        "isdigit" => Ok(Value::Bool(!s.is_empty() && s.chars().all(|c| c.is_ascii_digit()))),
        "startswith" => Ok(Value::Bool(s.starts_with(str_arg(0)?.as_str()))),
        "endswith" => Ok(Value::Bool(s.ends_with(str_arg(0)?.as_str()))),
        "replace" => {
            arity(name, a, 2, 2)?;
            Ok(Value::str(&s.replace(str_arg(0)?.as_str(), &str_arg(1)?)))
        }
        "find" => {
            let sub = str_arg(0)?;
            Ok(Value::Int(
                s.find(sub.as_str()).map(|b| s[..b].chars().count() as i64).unwrap_or(-1),
            ))
        }
        "count" => {
            let sub = str_arg(0)?;
            Ok(Value::Int(if sub.is_empty() {
                s.chars().count() as i64 + 1
            } else {
                s.matches(sub.as_str()).count() as i64
            }))
        }
        _ => unreachable!(),
    }
}
