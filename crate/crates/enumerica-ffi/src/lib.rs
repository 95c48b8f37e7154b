//! C ABI for the enumerica library.
//!
//! Conventions:
//! - Every fallible function returns an [`EnumericaStatus`] and writes its
//!   result through out-pointers.
//! - Big integers cross the boundary as NUL-terminated decimal strings
//!   allocated by Rust; release them with [`enumerica_string_free`].
//! - Curve-count tables are opaque handles; release them with
//!   [`enumerica_nd_table_free`].
//! - All functions are panic-safe: internal panics surface as
//!   `ENUMERICA_STATUS_COMPUTE_ERROR` instead of unwinding across the ABI.

use enumerica::gw::{kontsevich, recursion_from_wdvv, KontsevichTable};
use enumerica::{cells, localization, schubert};
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result codes for every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumericaStatus {
    Ok = 0,
    /// An argument was out of the documented range.
    InvalidArgument = 1,
    /// The computation failed internally (cross-checks disagreed, or a panic
    /// was caught).
    ComputeError = 2,
    /// A required pointer was NULL.
    NullPointer = 3,
}

/// Opaque table of rational plane curve counts N_1..N_dmax.
pub struct EnumericaNdTable {
    inner: KontsevichTable,
}

fn status_from_panic<F: FnOnce() -> EnumericaStatus>(f: F) -> EnumericaStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(EnumericaStatus::ComputeError)
}

fn write_string(out: *mut *mut c_char, value: String) -> EnumericaStatus {
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            EnumericaStatus::Ok
        }
        Err(_) => EnumericaStatus::ComputeError,
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn enumerica_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Frees a string allocated by this library. NULL is accepted.
///
/// # Safety
/// `s` must have been returned by an enumerica function and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn enumerica_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Lines on the degree-(2n-5) hypersurface in projective (n-1)-space via
/// Schubert calculus. Writes the count as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_lines_schubert(
    n: u32,
    out: *mut *mut c_char,
) -> EnumericaStatus {
    if out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    if !(3..=32).contains(&n) {
        return EnumericaStatus::InvalidArgument;
    }
    status_from_panic(|| write_string(out, schubert::lines_on_hypersurface(n).to_string()))
}

/// Same count via torus localization with `trials` seeded random weight
/// vectors (`trials >= 2`).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_lines_localization(
    n: u32,
    trials: u32,
    seed: u64,
    out: *mut *mut c_char,
) -> EnumericaStatus {
    if out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    if !(3..=32).contains(&n) || trials < 2 {
        return EnumericaStatus::InvalidArgument;
    }
    status_from_panic(|| match localization::lines_via_localization(n, trials, seed) {
        Ok(v) => write_string(out, v.to_string()),
        Err(_) => EnumericaStatus::ComputeError,
    })
}

/// Builds the table N_1..N_dmax from the closed recursion.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_nd_table_new(
    dmax: u32,
    out: *mut *mut EnumericaNdTable,
) -> EnumericaStatus {
    if out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    if !(1..=1024).contains(&dmax) {
        return EnumericaStatus::InvalidArgument;
    }
    status_from_panic(|| {
        let table = Box::new(EnumericaNdTable {
            inner: kontsevich(dmax),
        });
        *out = Box::into_raw(table);
        EnumericaStatus::Ok
    })
}

/// Builds the same table by solving the associativity identity order by
/// order; slower, independent route.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_nd_table_new_from_associativity(
    dmax: u32,
    out: *mut *mut EnumericaNdTable,
) -> EnumericaStatus {
    if out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    if !(1..=16).contains(&dmax) {
        return EnumericaStatus::InvalidArgument;
    }
    status_from_panic(|| {
        let table = Box::new(EnumericaNdTable {
            inner: recursion_from_wdvv(dmax),
        });
        *out = Box::into_raw(table);
        EnumericaStatus::Ok
    })
}

/// Number of entries in the table.
///
/// # Safety
/// `table` must be a live handle from a table constructor.
#[no_mangle]
pub unsafe extern "C" fn enumerica_nd_table_len(table: *const EnumericaNdTable) -> u32 {
    if table.is_null() {
        return 0;
    }
    (*table).inner.d_max()
}

/// The count N_d (1-based) as a decimal string.
///
/// # Safety
/// `table` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_nd_table_value(
    table: *const EnumericaNdTable,
    d: u32,
    out: *mut *mut c_char,
) -> EnumericaStatus {
    if table.is_null() || out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    let inner = &(*table).inner;
    if d < 1 || d > inner.d_max() {
        return EnumericaStatus::InvalidArgument;
    }
    write_string(out, inner.value(d).to_string())
}

/// Releases a table handle. NULL is accepted.
///
/// # Safety
/// `table` must have come from a table constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn enumerica_nd_table_free(table: *mut EnumericaNdTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Even Betti numbers of the Grassmannian of k-planes in n-space. Writes up
/// to `buf_len` entries into `buf` and the true count into `written`; fails
/// with `INVALID_ARGUMENT` when the buffer is too small (the required length
/// is `k(n-k) + 1`).
///
/// # Safety
/// `buf` must point to at least `buf_len` writable u64 slots, `written` must
/// be valid.
#[no_mangle]
pub unsafe extern "C" fn enumerica_betti(
    k: u32,
    n: u32,
    buf: *mut u64,
    buf_len: usize,
    written: *mut usize,
) -> EnumericaStatus {
    if buf.is_null() || written.is_null() {
        return EnumericaStatus::NullPointer;
    }
    if !(k >= 1 && k < n && n <= 64) {
        return EnumericaStatus::InvalidArgument;
    }
    status_from_panic(|| {
        let b = cells::betti(k, n);
        *written = b.len();
        if b.len() > buf_len {
            return EnumericaStatus::InvalidArgument;
        }
        for (i, v) in b.iter().enumerate() {
            *buf.add(i) = *v;
        }
        EnumericaStatus::Ok
    })
}

/// Euler characteristic of projective n-space.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_euler_projective(n: u32, out: *mut i64) -> EnumericaStatus {
    if out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    *out = localization::euler_char(localization::Space::Projective(n)) as i64;
    EnumericaStatus::Ok
}

/// Euler characteristic of the Grassmannian of k-planes in n-space.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_euler_grassmannian(
    k: u32,
    n: u32,
    out: *mut i64,
) -> EnumericaStatus {
    if out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    if !(k >= 1 && k < n && n <= 64) {
        return EnumericaStatus::InvalidArgument;
    }
    status_from_panic(|| {
        *out = localization::euler_char(localization::Space::Grassmannian(k, n)) as i64;
        EnumericaStatus::Ok
    })
}

/// Euler characteristic of the complete flag variety (n <= 20).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_euler_flag(n: u32, out: *mut i64) -> EnumericaStatus {
    if out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    if !(1..=20).contains(&n) {
        return EnumericaStatus::InvalidArgument;
    }
    let (chi, _) = cells::flag_stats(n);
    *out = chi as i64;
    EnumericaStatus::Ok
}

/// Euler characteristic of a closed orientable genus-g surface from Morse
/// cell counts: 2 - 2g.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn enumerica_euler_surface(genus: u32, out: *mut i64) -> EnumericaStatus {
    if out.is_null() {
        return EnumericaStatus::NullPointer;
    }
    if genus > 1 << 30 {
        return EnumericaStatus::InvalidArgument;
    }
    let morse = cells::CellDecomposition::surface_morse(genus);
    *out = cells::euler_from_cells(&morse, cells::CellMode::Real);
    EnumericaStatus::Ok
}

/// Euler characteristic of the 2-torus (no fixed points).
#[no_mangle]
pub extern "C" fn enumerica_euler_torus() -> i64 {
    localization::euler_char(localization::Space::Torus) as i64
}
