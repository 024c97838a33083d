use std::ffi::CStr;
use std::ptr;

use fibcube_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(fibcube_last_error()) }
        .to_string_lossy()
        .into_owned()
}

struct Handle(*mut FibcubeGraph);

impl Handle {
    fn new(family: u32, n: u32) -> Self {
        let mut g = ptr::null_mut();
        assert_eq!(
            unsafe { fibcube_graph_new(family, n, &mut g) },
            FibcubeStatus::Ok,
            "{}",
            last_error()
        );
        Handle(g)
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { fibcube_graph_free(self.0) }
    }
}

#[test]
fn graph_queries() {
    let g = Handle::new(FIBCUBE_FAMILY_LAMBDA, 5);
    let (mut v, mut d, mut n, mut has) = (0u64, 0u32, 0u32, false);
    unsafe {
        assert_eq!(fibcube_graph_dimension(g.0, &mut n), FibcubeStatus::Ok);
        assert_eq!(n, 5);
        assert_eq!(fibcube_graph_vertex_count(g.0, &mut v), FibcubeStatus::Ok);
        assert_eq!(v, 11);
        assert_eq!(fibcube_graph_edge_count(g.0, &mut v), FibcubeStatus::Ok);
        assert_eq!(v, 15);
        assert_eq!(fibcube_graph_irregularity(g.0, &mut v), FibcubeStatus::Ok);
        assert_eq!(v, 20);
        assert_eq!(
            fibcube_graph_contains(g.0, 0b10001, &mut has),
            FibcubeStatus::Ok
        );
        assert!(!has);
        assert_eq!(
            fibcube_graph_contains(g.0, 0b10100, &mut has),
            FibcubeStatus::Ok
        );
        assert!(has);
        assert_eq!(fibcube_graph_degree(g.0, 0, &mut d), FibcubeStatus::Ok);
        assert_eq!(d, 5);
        assert_eq!(
            fibcube_graph_degree(g.0, 1 << 5, &mut d),
            FibcubeStatus::InvalidArgument
        );
    }
}

#[test]
fn closed_forms() {
    let mut v = 0u64;
    unsafe {
        assert_eq!(
            fibcube_edge_count(FIBCUBE_FAMILY_GAMMA, 10, &mut v),
            FibcubeStatus::Ok
        );
        assert_eq!(v, 420);
        assert_eq!(
            fibcube_edge_count(FIBCUBE_FAMILY_Q, 3, &mut v),
            FibcubeStatus::Ok
        );
        assert_eq!(v, 12);
        assert_eq!(
            fibcube_edge_count(FIBCUBE_FAMILY_GAMMABAR, 5, &mut v),
            FibcubeStatus::Ok
        );
        assert_eq!(v, 35);
        assert_eq!(fibcube_complement_edge_count(58, &mut v), FibcubeStatus::Ok);
        assert_eq!(
            fibcube_complement_edge_count(64, &mut v),
            FibcubeStatus::Overflow
        );
        assert_eq!(
            fibcube_irregularity(FIBCUBE_FAMILY_LAMBDA, 6, &mut v),
            FibcubeStatus::Ok
        );
        assert_eq!(v, 36);
        assert_eq!(
            fibcube_irregularity(FIBCUBE_FAMILY_GAMMABAR, 6, &mut v),
            FibcubeStatus::Unsupported
        );
        assert_eq!(fibcube_fibonacci(10, &mut v), FibcubeStatus::Ok);
        assert_eq!(v, 55);
    }
}

#[test]
fn imbalance_and_embed() {
    let (mut d, mut v) = (0u32, 0u64);
    unsafe {
        assert_eq!(
            fibcube_imbalance(FIBCUBE_FAMILY_GAMMA, 5, 0b00100, 3, &mut d),
            FibcubeStatus::Ok
        );
        assert_eq!(d, 2);
        assert_eq!(
            fibcube_imbalance(FIBCUBE_FAMILY_GAMMA, 5, 0, 3, &mut d),
            FibcubeStatus::InvalidArgument
        );
        assert_eq!(
            fibcube_imbalance(FIBCUBE_FAMILY_Q, 3, 0b100, 1, &mut d),
            FibcubeStatus::Unsupported
        );
        assert_eq!(fibcube_embed(4, 0b0101, &mut v), FibcubeStatus::Ok);
        assert_eq!(v, 0b0011);
        assert_eq!(fibcube_embed(4, 0b0110, &mut v), FibcubeStatus::NotMember);
        assert_eq!(fibcube_embed(3, 0, &mut v), FibcubeStatus::InvalidArgument);
    }
}

#[test]
fn bad_arguments() {
    let mut g = ptr::null_mut();
    let mut v = 0u64;
    unsafe {
        assert_eq!(
            fibcube_graph_new(9, 3, &mut g),
            FibcubeStatus::InvalidArgument
        );
        assert!(last_error().contains("family"));
        assert_eq!(
            fibcube_graph_new(FIBCUBE_FAMILY_Q, 40, &mut g),
            FibcubeStatus::CapExceeded
        );
        assert!(g.is_null());
        assert_eq!(
            fibcube_graph_new(FIBCUBE_FAMILY_Q, 3, ptr::null_mut()),
            FibcubeStatus::NullPointer
        );
        assert_eq!(
            fibcube_graph_edge_count(ptr::null(), &mut v),
            FibcubeStatus::NullPointer
        );
        assert_eq!(
            fibcube_fibonacci(3, ptr::null_mut()),
            FibcubeStatus::NullPointer
        );
        fibcube_graph_free(ptr::null_mut());
        assert_eq!(fibcube_fibonacci(3, &mut v), FibcubeStatus::Ok);
        assert_eq!(last_error(), "");
    }
}

#[test]
fn status_messages() {
    for s in [
        FibcubeStatus::Ok,
        FibcubeStatus::Panic,
        FibcubeStatus::CapExceeded,
    ] {
        let msg = unsafe { CStr::from_ptr(fibcube_status_message(s)) };
        assert!(!msg.to_bytes().is_empty());
    }
}
