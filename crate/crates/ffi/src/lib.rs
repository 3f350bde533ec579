//! C interface to `sptrace`.
//!
//! Every fallible call returns a [`SptraceStatus`]; on failure the
//! message is kept per thread and read with
//! [`sptrace_last_error_message`]. Handles are opaque and freed with
//! their matching `_free` function. Strings handed out by the library
//! are freed with [`sptrace_string_free`].

use sptrace::cli::{run, EXIT_FAILED, EXIT_OK};
use sptrace::data::DataDir;
use sptrace::invariant_eval::RankConfig;
use sptrace::poincare::{RationalSeries, SeriesTable};
use sptrace::verify::{verify_msg, MsgOptions};
use sptrace::words::{canonicalize, parse_word, Alphabet, WordList};
use sptrace::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SptraceStatus {
    Ok = 0,
    /// A check ran and failed; the report is still produced.
    CheckFailed = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    Io = 5,
    Checksum = 6,
    Incompatible = 7,
    /// A value does not fit the requested integer type.
    Overflow = 8,
    /// Rank runs disagreed or had too few samples.
    Numeric = 9,
    Config = 10,
    Panic = 11,
}

/// A rational series N / ∏(1 − x^μ).
pub struct SptraceSeries(RationalSeries);

/// Taylor coefficients up to a total degree.
pub struct SptraceTable(SeriesTable);

/// A word list with its alphabet.
pub struct SptraceWords(WordList);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SptraceStatus {
    match e {
        Error::Parse { .. } | Error::Data(_) => SptraceStatus::Parse,
        Error::Fixture { source, .. } => status_of(source),
        Error::Io { .. } => SptraceStatus::Io,
        Error::Checksum(_) | Error::Unlisted(_) => SptraceStatus::Checksum,
        Error::Incompatible(_) | Error::Dimension(_) | Error::TooManyColumns { .. } => SptraceStatus::Incompatible,
        Error::Disagreement(_) | Error::InsufficientSamples { .. } => SptraceStatus::Numeric,
        Error::InvalidPrime(_) | Error::NoSqrtMinusOne(_) | Error::Config(_) => SptraceStatus::Config,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<SptraceStatus, (SptraceStatus, String)>) -> SptraceStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            SptraceStatus::Panic
        }
    }
}

fn lib(e: Error) -> (SptraceStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (SptraceStatus, String)> {
    if p.is_null() {
        return Err((SptraceStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (SptraceStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn null(what: &str) -> (SptraceStatus, String) {
    (SptraceStatus::NullPointer, format!("{what} is null"))
}

fn out_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message of the last failed call on this thread, or null. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sptrace_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn sptrace_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sptrace_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a series fixture from its text.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sptrace_series_parse(text: *const c_char, out: *mut *mut SptraceSeries) -> SptraceStatus {
    guard(|| {
        let t = str_arg(text, "text")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = sptrace::poincare::Fixture::parse(t).and_then(|f| f.to_series()).map_err(lib)?;
        *out = Box::into_raw(Box::new(SptraceSeries(s)));
        Ok(SptraceStatus::Ok)
    })
}

/// Load a series by file name from the bundled, checksummed data
/// directory, or by path.
///
/// # Safety
/// `name` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sptrace_series_load(name: *const c_char, out: *mut *mut SptraceSeries) -> SptraceStatus {
    guard(|| {
        let n = str_arg(name, "name")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = DataDir::bundled().and_then(|d| d.series(n)).map_err(lib)?;
        *out = Box::into_raw(Box::new(SptraceSeries(s)));
        Ok(SptraceStatus::Ok)
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sptrace_series_free(s: *mut SptraceSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of series variables, 0 for null.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sptrace_series_nvars(s: *const SptraceSeries) -> usize {
    s.as_ref().map_or(0, |s| s.0.nvars())
}

/// Sets `*holds` to 1 when the functional equation holds, else 0.
///
/// # Safety
/// `s` must be a live handle and `holds` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sptrace_series_check_functional_equation(s: *const SptraceSeries, holds: *mut i32) -> SptraceStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("series"))?;
        if holds.is_null() {
            return Err(null("holds"));
        }
        *holds = s.0.check_functional_equation().holds as i32;
        Ok(SptraceStatus::Ok)
    })
}

/// Expand up to total degree `bound`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sptrace_series_expand(s: *const SptraceSeries, bound: u32, out: *mut *mut SptraceTable) -> SptraceStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("series"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(SptraceTable(s.0.taylor_expand(bound))));
        Ok(SptraceStatus::Ok)
    })
}

/// # Safety
/// `t` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sptrace_table_free(t: *mut SptraceTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Coefficient at the exponent vector `exps` (length `len`, equal to
/// the number of variables). Degrees beyond the bound read as 0.
///
/// # Safety
/// `t` must be a live handle, `exps` must point to `len` values and
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sptrace_table_get(t: *const SptraceTable, exps: *const u32, len: usize, out: *mut i64) -> SptraceStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null("table"))?;
        if exps.is_null() || out.is_null() {
            return Err(null("exps or out"));
        }
        if len != t.0.vars.len() {
            return Err((SptraceStatus::Incompatible, format!("table has {} variables, got {len} exponents", t.0.vars.len())));
        }
        let m = std::slice::from_raw_parts(exps, len);
        let c = t.0.get(m);
        *out = i64::try_from(&c).map_err(|_| (SptraceStatus::Overflow, format!("coefficient {c} does not fit in 64 bits")))?;
        Ok(SptraceStatus::Ok)
    })
}

/// Parse a word list (`alphabet:` header, one word per line).
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sptrace_words_parse(text: *const c_char, out: *mut *mut SptraceWords) -> SptraceStatus {
    guard(|| {
        let t = str_arg(text, "text")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let w = WordList::parse(t).map_err(lib)?;
        *out = Box::into_raw(Box::new(SptraceWords(w)));
        Ok(SptraceStatus::Ok)
    })
}

/// Load a word list from the bundled data directory, or by path.
///
/// # Safety
/// `name` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sptrace_words_load(name: *const c_char, out: *mut *mut SptraceWords) -> SptraceStatus {
    guard(|| {
        let n = str_arg(name, "name")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let w = DataDir::bundled().and_then(|d| d.parse_with(n, WordList::parse)).map_err(lib)?;
        *out = Box::into_raw(Box::new(SptraceWords(w)));
        Ok(SptraceStatus::Ok)
    })
}

/// # Safety
/// `w` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sptrace_words_free(w: *mut SptraceWords) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Number of words, 0 for null.
///
/// # Safety
/// `w` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sptrace_words_len(w: *const SptraceWords) -> usize {
    w.as_ref().map_or(0, |w| w.0.len())
}

/// Canonical form of `word` over `alphabet`; `*sign` is 0 when the
/// trace vanishes identically.
///
/// # Safety
/// Strings must be valid C strings; `canon` and `sign` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sptrace_canonicalize(alphabet: *const c_char, word: *const c_char, canon: *mut *mut c_char, sign: *mut i8) -> SptraceStatus {
    guard(|| {
        let a = Alphabet::parse(str_arg(alphabet, "alphabet")?).map_err(lib)?;
        let w = parse_word(str_arg(word, "word")?, &a).map_err(lib)?;
        if canon.is_null() || sign.is_null() {
            return Err(null("canon or sign"));
        }
        let c = canonicalize(&w, &a).map_err(lib)?;
        *canon = out_string(c.canon.display(&a).to_string());
        *sign = c.sign;
        Ok(SptraceStatus::Ok)
    })
}

/// Spanning check of `words` against `series` up to total degree
/// `bound`, with removals up to `minimality` when it is nonnegative.
/// The JSON report goes to `*json`; returns `CheckFailed` when some
/// degree is deficient.
///
/// # Safety
/// Handles must be live; `json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sptrace_verify_msg(
    words: *const SptraceWords,
    series: *const SptraceSeries,
    bound: u32,
    minimality: i32,
    json: *mut *mut c_char,
) -> SptraceStatus {
    guard(|| {
        let w = words.as_ref().ok_or_else(|| null("words"))?;
        let s = series.as_ref().ok_or_else(|| null("series"))?;
        if json.is_null() {
            return Err(null("json"));
        }
        let opts = MsgOptions { bound, minimality_bound: u32::try_from(minimality).ok(), rank: RankConfig::default() };
        let r = verify_msg(&w.0, &s.0, &opts).map_err(lib)?;
        *json = out_string(serde_json::to_string(&r).expect("plain data"));
        Ok(if r.ok { SptraceStatus::Ok } else { SptraceStatus::CheckFailed })
    })
}

/// Run the command line with `argc` arguments (program name excluded);
/// the report goes to `*output`. Returns the exit code (0, 1 or 2).
///
/// # Safety
/// `argv` must hold `argc` valid C strings; `output` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sptrace_run_cli(argc: usize, argv: *const *const c_char, output: *mut *mut c_char) -> i32 {
    let mut code = 2;
    let st = guard(|| {
        if output.is_null() || (argc > 0 && argv.is_null()) {
            return Err(null("argv or output"));
        }
        let mut args = vec!["sptrace".to_string()];
        for i in 0..argc {
            args.push(str_arg(*argv.add(i), "argument")?.to_string());
        }
        let mut out = Vec::new();
        let mut err = Vec::new();
        code = run(args, |k| std::env::var(k).ok(), &mut out, &mut err);
        if code != EXIT_OK && code != EXIT_FAILED {
            set_error(String::from_utf8_lossy(&err).trim().to_string());
        }
        *output = out_string(String::from_utf8_lossy(&out).into_owned());
        Ok(SptraceStatus::Ok)
    });
    if st != SptraceStatus::Ok {
        2
    } else {
        code
    }
}
