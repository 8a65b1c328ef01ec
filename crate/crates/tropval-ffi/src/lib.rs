//! C ABI for the tropval library.
//!
//! Conventions:
//! - Every fallible function returns a [`TvStatus`]; outputs are written
//!   through out-pointers only on `TV_STATUS_OK`.
//! - Strings returned through `*mut *mut c_char` are NUL-terminated,
//!   heap-allocated, and must be released with [`tv_string_free`].
//! - Opaque handles ([`TvValue`], [`TvHyper`]) must be released with their
//!   matching `_free` function. `_free` functions accept null.
//! - On failure, a human-readable message is stored per thread and can be
//!   fetched with [`tv_last_error_message`].
//!
//! The surface syntax is the tropical one used by the CLI: `+` is max,
//! `*` is classical addition, `/` builds fractions, `^` repeats `*`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use tropval::error::Error;
use tropval::expr::{eval_str, PolyValue};
use tropval::hyper::{
    check_hyperfield, check_hypergroup, check_hyperring, full_unit_group, iso_search, krasner,
    quotient_hyperring, rval_axiom_check, signs, FiniteHyperstructure,
};
use tropval::poly::{canonicalize, factor, func_equiv, poly_add, poly_degree, poly_eval, poly_mul, t_order, TropPoly};
use tropval::ratfunc::{rat_add, rat_eq, rat_inv, rat_mul};
use tropval::scalar::parse_scalar;
use tropval::valuation::{ff_val_eval, parse_valuation_spec, qmax_val_eval, Valuation, ValuationKind};

/// Result of every fallible call. Domain and syntax failures mirror the
/// CLI exit codes 1 and 2.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TvStatus {
    Ok = 0,
    Domain = 1,
    Syntax = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
}

/// Opaque handle to a parsed value: a tropical polynomial in Q_max[T] or a
/// fraction in Q_max(T).
pub struct TvValue {
    inner: PolyValue,
}

/// Opaque handle to a finite hyperstructure table.
pub struct TvHyper {
    inner: FiniteHyperstructure,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn remember(msg: impl Into<String>) {
    let msg = msg.into();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
}

fn fail(status: TvStatus, msg: impl Into<String>) -> TvStatus {
    remember(msg);
    status
}

fn from_error(e: &Error) -> TvStatus {
    remember(e.to_string());
    match e.exit_code() {
        2 => TvStatus::Syntax,
        _ => TvStatus::Domain,
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, TvStatus> {
    if p.is_null() {
        return Err(fail(TvStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(TvStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn read_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, TvStatus> {
    p.as_ref()
        .ok_or_else(|| fail(TvStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_slot<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, TvStatus> {
    p.as_mut()
        .ok_or_else(|| fail(TvStatus::NullPointer, format!("{what} is null")))
}

fn write_string(s: String, out: &mut *mut c_char) -> TvStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TvStatus::Ok
        }
        Err(_) => fail(TvStatus::Domain, "output contained an interior NUL byte"),
    }
}

fn write_value(v: PolyValue, out: &mut *mut TvValue) -> TvStatus {
    *out = Box::into_raw(Box::new(TvValue { inner: v }));
    TvStatus::Ok
}

fn write_hyper(h: FiniteHyperstructure, out: &mut *mut TvHyper) -> TvStatus {
    *out = Box::into_raw(Box::new(TvHyper { inner: h }));
    TvStatus::Ok
}

/// The underlying polynomial of a value, or a domain error when the
/// fraction has a genuine denominator.
fn poly_of(v: &PolyValue) -> Result<TropPoly, Error> {
    v.as_poly().ok_or_else(|| Error::InvalidParameter {
        reason: "this operation expects a polynomial, but the value has a nontrivial \
                 denominator (print it with tv_value_ratify)"
            .into(),
    })
}

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

/// Parse a tropical expression into a value handle.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_parse(src: *const c_char, out: *mut *mut TvValue) -> TvStatus {
    let (src, out) = match (read_str(src, "src"), out_slot(out, "out")) {
        (Ok(s), Ok(o)) => (s, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    match eval_str(src) {
        Ok(v) => write_value(v, out),
        Err(e) => from_error(&e),
    }
}

/// Release a value handle (null is accepted).
///
/// # Safety
/// `v` must be null or a pointer produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tv_value_free(v: *mut TvValue) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Print a value in the surface syntax (re-parseable).
///
/// # Safety
/// `v` must be a live value handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_print(v: *const TvValue, out: *mut *mut c_char) -> TvStatus {
    let (v, out) = match (read_ref(v, "value"), out_slot(out, "out")) {
        (Ok(v), Ok(o)) => (v, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    write_string(v.inner.to_string(), out)
}

/// Canonical form of a polynomial value:
/// `coeffs=[...] torder=... degree=...` (exponent 0 upward).
///
/// # Safety
/// `v` must be a live value handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_canon(v: *const TvValue, out: *mut *mut c_char) -> TvStatus {
    let (v, out) = match (read_ref(v, "value"), out_slot(out, "out")) {
        (Ok(v), Ok(o)) => (v, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let p = match poly_of(&v.inner) {
        Ok(p) => p,
        Err(e) => return from_error(&e),
    };
    let c = canonicalize(&p);
    let coeffs = c
        .coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let line = if c.is_zero_poly() {
        format!("coeffs=[{coeffs}] torder=none degree=none")
    } else {
        match (t_order(&c), poly_degree(&c)) {
            (Ok(r), Ok(d)) => format!("coeffs=[{coeffs}] torder={r} degree={d}"),
            (Err(e), _) | (_, Err(e)) => return from_error(&e),
        }
    };
    write_string(line, out)
}

/// Unique factorization of a nonzero polynomial value:
/// `unit=... tpower=... roots=[...]` with roots in non-increasing order.
///
/// # Safety
/// `v` must be a live value handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_factor(v: *const TvValue, out: *mut *mut c_char) -> TvStatus {
    let (v, out) = match (read_ref(v, "value"), out_slot(out, "out")) {
        (Ok(v), Ok(o)) => (v, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let p = match poly_of(&v.inner) {
        Ok(p) => p,
        Err(e) => return from_error(&e),
    };
    match factor(&canonicalize(&p)) {
        Ok(fac) => write_string(fac.to_string(), out),
        Err(e) => from_error(&e),
    }
}

/// Evaluate a value at a scalar point given in the surface syntax
/// (`3/2`, `-inf`, ...); writes the exact result scalar.
///
/// # Safety
/// `v` must be a live value handle; `at` must be a NUL-terminated string;
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_eval(
    v: *const TvValue,
    at: *const c_char,
    out: *mut *mut c_char,
) -> TvStatus {
    let (v, at, out) = match (read_ref(v, "value"), read_str(at, "at"), out_slot(out, "out")) {
        (Ok(v), Ok(a), Ok(o)) => (v, a, o),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    let point = match parse_scalar(at) {
        Ok(p) => p,
        Err(e) => return from_error(&e),
    };
    let result = match &v.inner {
        PolyValue::Poly(p) => Ok(poly_eval(p, &point)),
        PolyValue::Frac(r) => r.eval(&point),
    };
    match result {
        Ok(value) => write_string(value.to_string(), out),
        Err(e) => from_error(&e),
    }
}

/// Normal form of a value as a fraction, printed `(num)/(den)`.
///
/// # Safety
/// `v` must be a live value handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_ratify(v: *const TvValue, out: *mut *mut c_char) -> TvStatus {
    let (v, out) = match (read_ref(v, "value"), out_slot(out, "out")) {
        (Ok(v), Ok(o)) => (v, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    write_string(v.inner.to_frac().to_string(), out)
}

/// Equality test: functional equivalence for polynomials, fraction
/// equality (cross-multiplication) otherwise. Writes `true`/`false` into
/// `out`.
///
/// # Safety
/// `a` and `b` must be live value handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_equiv(
    a: *const TvValue,
    b: *const TvValue,
    out: *mut bool,
) -> TvStatus {
    let (a, b, out) = match (read_ref(a, "lhs"), read_ref(b, "rhs"), out_slot(out, "out")) {
        (Ok(a), Ok(b), Ok(o)) => (a, b, o),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    *out = match (a.inner.as_poly(), b.inner.as_poly()) {
        (Some(p), Some(q)) => func_equiv(&p, &q),
        _ => rat_eq(&a.inner.to_frac(), &b.inner.to_frac()),
    };
    TvStatus::Ok
}

/// Tropical sum (pointwise max) of two values.
///
/// # Safety
/// `a` and `b` must be live value handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_add(
    a: *const TvValue,
    b: *const TvValue,
    out: *mut *mut TvValue,
) -> TvStatus {
    let (a, b, out) = match (read_ref(a, "lhs"), read_ref(b, "rhs"), out_slot(out, "out")) {
        (Ok(a), Ok(b), Ok(o)) => (a, b, o),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    let v = match (a.inner.as_poly(), b.inner.as_poly()) {
        (Some(p), Some(q)) => PolyValue::Poly(poly_add(&p, &q)),
        _ => PolyValue::Frac(rat_add(&a.inner.to_frac(), &b.inner.to_frac())),
    };
    write_value(v, out)
}

/// Tropical product (classical addition of values) of two values.
///
/// # Safety
/// `a` and `b` must be live value handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_mul(
    a: *const TvValue,
    b: *const TvValue,
    out: *mut *mut TvValue,
) -> TvStatus {
    let (a, b, out) = match (read_ref(a, "lhs"), read_ref(b, "rhs"), out_slot(out, "out")) {
        (Ok(a), Ok(b), Ok(o)) => (a, b, o),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    let v = match (a.inner.as_poly(), b.inner.as_poly()) {
        (Some(p), Some(q)) => PolyValue::Poly(poly_mul(&p, &q)),
        _ => PolyValue::Frac(rat_mul(&a.inner.to_frac(), &b.inner.to_frac())),
    };
    write_value(v, out)
}

/// Quotient of two values in Q_max(T); fails on a zero denominator.
///
/// # Safety
/// `a` and `b` must be live value handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_value_div(
    a: *const TvValue,
    b: *const TvValue,
    out: *mut *mut TvValue,
) -> TvStatus {
    let (a, b, out) = match (read_ref(a, "lhs"), read_ref(b, "rhs"), out_slot(out, "out")) {
        (Ok(a), Ok(b), Ok(o)) => (a, b, o),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    let den = b.inner.to_frac();
    if den.is_zero_frac() {
        return from_error(&Error::ZeroDenominator);
    }
    let inv = match rat_inv(&den) {
        Ok(inv) => inv,
        Err(e) => return from_error(&e),
    };
    write_value(
        PolyValue::Frac(rat_mul(&a.inner.to_frac(), &inv)),
        out,
    )
}

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

/// Apply a valuation given by a spec string, e.g.
/// `kind=strict; base=qmax(T); param=-1`, to an expression; writes the
/// exact value (`-inf`, a rational, or `inf`).
///
/// # Safety
/// `spec` and `expr` must be NUL-terminated strings; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_valuate(
    spec: *const c_char,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> TvStatus {
    let (spec, expr, out) = match (
        read_str(spec, "spec"),
        read_str(expr, "expr"),
        out_slot(out, "out"),
    ) {
        (Ok(s), Ok(e), Ok(o)) => (s, e, o),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    let valuation = match parse_valuation_spec(spec) {
        Ok(v) => v,
        Err(e) => return from_error(&e),
    };
    let parsed = match eval_str(expr) {
        Ok(v) => v,
        Err(e) => return from_error(&e),
    };
    let value = match &valuation {
        Valuation::Qmax(v) => {
            let scalar = match parsed.as_poly().filter(|p| p.coeffs().len() <= 1) {
                Some(p) => p.coeff(0),
                None => {
                    return from_error(&Error::InvalidParameter {
                        reason: "a qmax valuation applies to scalars; this expression \
                                 involves T"
                            .into(),
                    })
                }
            };
            qmax_val_eval(v, &scalar)
        }
        Valuation::FunctionField(v) => ff_val_eval(v, &parsed.to_frac()),
    };
    write_string(value.to_string(), out)
}

/// List the valuation equivalence classes for a kind
/// (`classical|strict|hyper`) and carrier (`qmax|qmax(T)`), one
/// `label=... param=...` row per line.
///
/// # Safety
/// `kind` and `carrier` must be NUL-terminated strings; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_classify(
    kind: *const c_char,
    carrier: *const c_char,
    out: *mut *mut c_char,
) -> TvStatus {
    let (kind, carrier, out) = match (
        read_str(kind, "kind"),
        read_str(carrier, "carrier"),
        out_slot(out, "out"),
    ) {
        (Ok(k), Ok(c), Ok(o)) => (k, c, o),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    let kind: ValuationKind = match kind.parse() {
        Ok(k) => k,
        Err(e) => return from_error(&e),
    };
    let rows = match carrier {
        "qmax" => Ok(tropval::valuation::qmax_classify(kind)),
        "qmax(T)" | "qmax(t)" => tropval::valuation::ff_classify(kind),
        other => Err(Error::InvalidParameter {
            reason: format!("unknown carrier {other:?} (qmax|qmax(T))"),
        }),
    };
    match rows {
        Ok(rows) => {
            let mut text = String::new();
            for row in rows {
                text.push_str(&format!("{row}\n"));
            }
            write_string(text, out)
        }
        Err(e) => from_error(&e),
    }
}

/// The abstract curve attached to Q_max(T): three `point=...` rows plus a
/// `points=3 closed_points=2` summary, matching the CLI.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_curve(out: *mut *mut c_char) -> TvStatus {
    let out = match out_slot(out, "out") {
        Ok(o) => o,
        Err(e) => return e,
    };
    let curve = tropval::valuation::abstract_curve();
    let mut text = String::new();
    for p in curve.points() {
        text.push_str(&format!(
            "point={} valuation={} ideal={} closed={}\n",
            p.point, p.valuation, p.ideal, p.closed
        ));
    }
    text.push_str(&format!(
        "points={} closed_points={}\n",
        curve.points().len(),
        curve.closed_point_count()
    ));
    write_string(text, out)
}

// ---------------------------------------------------------------------------
// Hyperstructures
// ---------------------------------------------------------------------------

/// Load a built-in hyperstructure: `krasner` or `signs`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_hyper_builtin(
    name: *const c_char,
    out: *mut *mut TvHyper,
) -> TvStatus {
    let (name, out) = match (read_str(name, "name"), out_slot(out, "out")) {
        (Ok(n), Ok(o)) => (n, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    match name {
        "krasner" => write_hyper(krasner(), out),
        "signs" => write_hyper(signs(), out),
        other => fail(
            TvStatus::Domain,
            format!("unknown builtin {other:?} (krasner|signs)"),
        ),
    }
}

/// Parse a hyperstructure table from its textual format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_hyper_parse(text: *const c_char, out: *mut *mut TvHyper) -> TvStatus {
    let (text, out) = match (read_str(text, "text"), out_slot(out, "out")) {
        (Ok(t), Ok(o)) => (t, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    match FiniteHyperstructure::parse(text) {
        Ok(h) => write_hyper(h, out),
        Err(e) => from_error(&e),
    }
}

/// Build the quotient hyperring (Z/modulus)/G. `units` is a
/// comma-separated list of generators of G, or `full` for the whole unit
/// group.
///
/// # Safety
/// `units` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_hyper_quotient(
    modulus: u64,
    units: *const c_char,
    out: *mut *mut TvHyper,
) -> TvStatus {
    let (units, out) = match (read_str(units, "units"), out_slot(out, "out")) {
        (Ok(u), Ok(o)) => (u, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let gens: Vec<u64> = if units == "full" {
        full_unit_group(modulus)
    } else {
        let mut gens = Vec::new();
        for part in units.split(',') {
            match part.trim().parse::<u64>() {
                Ok(g) => gens.push(g),
                Err(_) => {
                    return fail(
                        TvStatus::Domain,
                        format!("invalid unit generator {:?}", part.trim()),
                    )
                }
            }
        }
        gens
    };
    match quotient_hyperring(modulus, &gens) {
        Ok(h) => write_hyper(h, out),
        Err(e) => from_error(&e),
    }
}

/// Serialize a hyperstructure to its textual table format (round-trips
/// through [`tv_hyper_parse`]).
///
/// # Safety
/// `h` must be a live hyperstructure handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_hyper_serialize(
    h: *const TvHyper,
    out: *mut *mut c_char,
) -> TvStatus {
    let (h, out) = match (read_ref(h, "hyperstructure"), out_slot(out, "out")) {
        (Ok(h), Ok(o)) => (h, o),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    write_string(h.inner.serialize(), out)
}

/// Check axioms at a level (`group|ring|field`). `passed` receives the
/// verdict; `report` receives the per-axiom report (ends `result=pass` or
/// `result=fail`). A failed axiom check still returns `TV_STATUS_OK` —
/// the check itself succeeded.
///
/// # Safety
/// `h` must be a live hyperstructure handle; `level` must be a
/// NUL-terminated string; `passed` and `report` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tv_hyper_check(
    h: *const TvHyper,
    level: *const c_char,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> TvStatus {
    let (h, level, passed, report) = match (
        read_ref(h, "hyperstructure"),
        read_str(level, "level"),
        out_slot(passed, "passed"),
        out_slot(report, "report"),
    ) {
        (Ok(h), Ok(l), Ok(p), Ok(r)) => (h, l, p, r),
        (Err(e), _, _, _) | (_, Err(e), _, _) | (_, _, Err(e), _) | (_, _, _, Err(e)) => {
            return e
        }
    };
    let checked = match level {
        "group" => check_hypergroup(&h.inner),
        "ring" => check_hyperring(&h.inner),
        "field" => check_hyperfield(&h.inner),
        other => {
            return fail(
                TvStatus::Domain,
                format!("unknown level {other:?} (group|ring|field)"),
            )
        }
    };
    *passed = checked.passed();
    write_string(checked.to_string(), report)
}

/// Search for an isomorphism between two tables. Writes `iso=false` or
/// `iso=true` followed by `map=x:y` lines.
///
/// # Safety
/// `a` and `b` must be live hyperstructure handles; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_hyper_iso(
    a: *const TvHyper,
    b: *const TvHyper,
    out: *mut *mut c_char,
) -> TvStatus {
    let (a, b, out) = match (
        read_ref(a, "lhs"),
        read_ref(b, "rhs"),
        out_slot(out, "out"),
    ) {
        (Ok(a), Ok(b), Ok(o)) => (a, b, o),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    match iso_search(&a.inner, &b.inner) {
        Ok(Some(mapping)) => {
            let mut text = String::from("iso=true\n");
            for (x, y) in mapping {
                text.push_str(&format!("map={x}:{y}\n"));
            }
            write_string(text, out)
        }
        Ok(None) => write_string("iso=false\n".into(), out),
        Err(e) => from_error(&e),
    }
}

/// Release a hyperstructure handle (null is accepted).
///
/// # Safety
/// `h` must be null or a pointer produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tv_hyper_free(h: *mut TvHyper) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Check the R_{+,val} hyperfield axioms exhaustively over a
/// comma-separated scalar sample set (e.g. `-inf, 0, 1, 5/2`).
///
/// # Safety
/// `samples` must be a NUL-terminated string; `passed` and `report` must
/// be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tv_rval_check(
    samples: *const c_char,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> TvStatus {
    let (samples, passed, report) = match (
        read_str(samples, "samples"),
        out_slot(passed, "passed"),
        out_slot(report, "report"),
    ) {
        (Ok(s), Ok(p), Ok(r)) => (s, p, r),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
    };
    let mut scalars = Vec::new();
    for part in samples.split(',') {
        match parse_scalar(part.trim()) {
            Ok(s) => scalars.push(s),
            Err(e) => return from_error(&e),
        }
    }
    let checked = rval_axiom_check(&scalars);
    *passed = checked.passed();
    write_string(checked.to_string(), report)
}

// ---------------------------------------------------------------------------
// Strings and errors
// ---------------------------------------------------------------------------

/// Release a string returned by this library (null is accepted).
///
/// # Safety
/// `s` must be null or a string produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Copy the current thread's last error message (empty if none). The copy
/// must be released with [`tv_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tv_last_error_message(out: *mut *mut c_char) -> TvStatus {
    let out = match out_slot(out, "out") {
        Ok(o) => o,
        Err(e) => return e,
    };
    let msg = LAST_ERROR.with(|slot| slot.borrow().clone());
    write_string(msg, out)
}
