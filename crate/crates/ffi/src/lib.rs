//! C ABI for `fibcube`.
//!
//! Strings cross the boundary as `(bits, n)`: the low `n` bits of a `uint64_t`
//! with position 1 in the most significant of them. Every function returns a
//! [`FibcubeStatus`] and writes its result through an out-pointer. Counts are
//! `uint64_t`; values that do not fit give `FIBCUBE_STATUS_OVERFLOW`.
//!
//! Families are passed as `uint32_t` using the `FIBCUBE_FAMILY_*` constants.
//! The detail of the most recent failure on the calling thread is available
//! from [`fibcube_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{self, AssertUnwindSafe};

use fibcube::complement::{complement_edge_count, embed_gamma_into_complement};
use fibcube::cubes::{gamma_edge_count, hypercube_edge_count, lucas_edge_count};
use fibcube::imbalance::{imbalance, irregularity};
use fibcube::oracle::oracle_irregularity;
use fibcube::strings::fibonacci;
use fibcube::{BitString, Count, CubeGraph, Error, Family};

pub const FIBCUBE_FAMILY_Q: u32 = 0;
pub const FIBCUBE_FAMILY_GAMMA: u32 = 1;
pub const FIBCUBE_FAMILY_LAMBDA: u32 = 2;
pub const FIBCUBE_FAMILY_GAMMABAR: u32 = 3;

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibcubeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    Overflow = 4,
    NotMember = 5,
    Unsupported = 6,
    Internal = 7,
    Panic = 8,
}

/// Opaque graph handle. Create with `fibcube_graph_new`, release with
/// `fibcube_graph_free`.
pub struct FibcubeGraph(CubeGraph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(FibcubeStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::CapExceeded { .. } => FibcubeStatus::CapExceeded,
            Error::Overflow(_) => FibcubeStatus::Overflow,
            Error::NotMember { .. }
            | Error::NotAnEdge { .. }
            | Error::NotFibonacci(_)
            | Error::NotNonFib(_) => FibcubeStatus::NotMember,
            Error::UnsupportedFamily(_) => FibcubeStatus::Unsupported,
            Error::ImbalanceExceedsTwo(_) | Error::InternalMismatch { .. } => {
                FibcubeStatus::Internal
            }
            Error::LengthTooLarge { .. }
            | Error::Parse(_)
            | Error::DirectionBitNotSet { .. }
            | Error::DirectionOutOfRange { .. }
            | Error::WrongSide
            | Error::InvalidCouple(_)
            | Error::InvalidEdge(_)
            | Error::NTooSmall { .. } => FibcubeStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> FibcubeStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            FibcubeStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside fibcube");
            FibcubeStatus::Panic
        }
    }
}

fn write<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(Failure(
            FibcubeStatus::NullPointer,
            "null output pointer".into(),
        ));
    }
    // SAFETY: non-null; the caller promises it points to writable storage for T.
    unsafe { out.write(value) };
    Ok(())
}

fn graph<'a>(g: *const FibcubeGraph) -> FfiResult<&'a CubeGraph> {
    // SAFETY: the caller passes a handle from fibcube_graph_new that has not been freed.
    unsafe { g.as_ref() }
        .map(|g| &g.0)
        .ok_or_else(|| Failure(FibcubeStatus::NullPointer, "null graph handle".into()))
}

fn family(code: u32) -> FfiResult<Family> {
    match code {
        FIBCUBE_FAMILY_Q => Ok(Family::Hypercube),
        FIBCUBE_FAMILY_GAMMA => Ok(Family::Fibonacci),
        FIBCUBE_FAMILY_LAMBDA => Ok(Family::Lucas),
        FIBCUBE_FAMILY_GAMMABAR => Ok(Family::FibComplement),
        other => Err(Failure(
            FibcubeStatus::InvalidArgument,
            format!("unknown family code {other}"),
        )),
    }
}

fn string(bits: u64, n: u32) -> FfiResult<BitString> {
    Ok(BitString::new(bits, n)?)
}

fn to_u64(v: Count) -> FfiResult<u64> {
    u64::try_from(v).map_err(|_| {
        Failure(
            FibcubeStatus::Overflow,
            format!("{v} does not fit in 64 bits"),
        )
    })
}

/// Builds `Q_n`, `Γ_n`, `Λ_n` or `Γ̄_n` with the default enumeration cap.
///
/// # Safety
/// `out` must be null or point to writable storage for a handle pointer.
#[no_mangle]
pub unsafe extern "C" fn fibcube_graph_new(
    family_code: u32,
    n: u32,
    out: *mut *mut FibcubeGraph,
) -> FibcubeStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(
                FibcubeStatus::NullPointer,
                "null output pointer".into(),
            ));
        }
        let g = CubeGraph::build(family(family_code)?, n)?;
        write(out, Box::into_raw(Box::new(FibcubeGraph(g))))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle from `fibcube_graph_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fibcube_graph_free(g: *mut FibcubeGraph) {
    if !g.is_null() {
        // SAFETY: ownership returns from the caller, per the contract above.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_graph_dimension(
    g: *const FibcubeGraph,
    out: *mut u32,
) -> FibcubeStatus {
    guard(|| write(out, graph(g)?.n()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_graph_vertex_count(
    g: *const FibcubeGraph,
    out: *mut u64,
) -> FibcubeStatus {
    guard(|| write(out, graph(g)?.vertex_count() as u64))
}

/// Edge count by enumeration.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_graph_edge_count(
    g: *const FibcubeGraph,
    out: *mut u64,
) -> FibcubeStatus {
    guard(|| write(out, to_u64(graph(g)?.edge_count())?))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_graph_contains(
    g: *const FibcubeGraph,
    bits: u64,
    out: *mut bool,
) -> FibcubeStatus {
    guard(|| {
        let g = graph(g)?;
        write(out, g.contains(&string(bits, g.n())?))
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_graph_degree(
    g: *const FibcubeGraph,
    bits: u64,
    out: *mut u32,
) -> FibcubeStatus {
    guard(|| {
        let g = graph(g)?;
        write(out, g.degree(&string(bits, g.n())?)?)
    })
}

/// Sum of endpoint degree differences over all edges, by enumeration.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_graph_irregularity(
    g: *const FibcubeGraph,
    out: *mut u64,
) -> FibcubeStatus {
    guard(|| write(out, to_u64(oracle_irregularity(graph(g)?))?))
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_fibonacci(k: u32, out: *mut u64) -> FibcubeStatus {
    guard(|| write(out, to_u64(fibonacci(k)?)?))
}

/// Edge count from the closed forms.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_edge_count(
    family_code: u32,
    n: u32,
    out: *mut u64,
) -> FibcubeStatus {
    guard(|| {
        let count = match family(family_code)? {
            Family::Hypercube => hypercube_edge_count(n)?,
            Family::Fibonacci => gamma_edge_count(n)?,
            Family::Lucas => lucas_edge_count(n)?,
            Family::FibComplement => complement_edge_count(n)?,
        };
        write(out, to_u64(count)?)
    })
}

/// `|E(Γ̄_n)|` from the closed forms.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_complement_edge_count(n: u32, out: *mut u64) -> FibcubeStatus {
    guard(|| write(out, to_u64(complement_edge_count(n)?)?))
}

/// Irregularity from the closed forms; `FIBCUBE_FAMILY_GAMMABAR` is unsupported.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_irregularity(
    family_code: u32,
    n: u32,
    out: *mut u64,
) -> FibcubeStatus {
    guard(|| write(out, to_u64(irregularity(family(family_code)?, n)?)?))
}

/// Imbalance (0, 1 or 2) of the edge `{x, x + e_dir}` of `Γ_n` or `Λ_n`,
/// where `x = (upper_bits, n)` has a 1 at `dir`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_imbalance(
    family_code: u32,
    n: u32,
    upper_bits: u64,
    dir: u32,
    out: *mut u32,
) -> FibcubeStatus {
    guard(|| {
        let v = imbalance(family(family_code)?, &string(upper_bits, n)?, dir)?;
        write(out, v.value())
    })
}

/// Image of a Fibonacci string of length `n >= 4` in `Γ̄_n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibcube_embed(n: u32, bits: u64, out: *mut u64) -> FibcubeStatus {
    guard(|| write(out, embed_gamma_into_complement(&string(bits, n)?)?.value()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn fibcube_status_message(status: FibcubeStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        FibcubeStatus::Ok => b"ok\0",
        FibcubeStatus::NullPointer => b"null pointer\0",
        FibcubeStatus::InvalidArgument => b"invalid argument\0",
        FibcubeStatus::CapExceeded => b"enumeration cap exceeded\0",
        FibcubeStatus::Overflow => b"value does not fit\0",
        FibcubeStatus::NotMember => b"string is not in the family\0",
        FibcubeStatus::Unsupported => b"unsupported family\0",
        FibcubeStatus::Internal => b"internal consistency check failed\0",
        FibcubeStatus::Panic => b"panic\0",
    };
    s.as_ptr().cast()
}

/// Detail of the last failure on this thread, or "" after a success. The
/// pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn fibcube_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
