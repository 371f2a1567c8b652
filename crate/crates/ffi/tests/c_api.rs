use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sombor_ffi::*;

fn take_string(f: impl Fn(*mut c_char, usize, *mut usize) -> SomborStatus) -> String {
    let mut len = 0usize;
    assert_eq!(
        f(ptr::null_mut(), 0, &mut len),
        SomborStatus::BufferTooSmall
    );
    let mut buf = vec![0 as c_char; len + 1];
    assert_eq!(f(buf.as_mut_ptr(), buf.len(), &mut len), SomborStatus::Ok);
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 256];
    unsafe { sombor_last_error(buf.as_mut_ptr(), buf.len()) };
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn graph_handle_lifecycle() {
    let endpoints: [usize; 12] = [0, 1, 1, 2, 2, 3, 3, 4, 1, 5, 5, 3];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            sombor_graph_from_edges(6, endpoints.as_ptr(), 6, &mut g),
            SomborStatus::Ok
        );
        let (mut n, mut m, mut d, mut uni) = (0, 0, 0, false);
        assert_eq!(sombor_graph_order(g, &mut n), SomborStatus::Ok);
        assert_eq!(sombor_graph_size(g, &mut m), SomborStatus::Ok);
        assert_eq!(sombor_graph_diameter(g, &mut d), SomborStatus::Ok);
        assert_eq!(sombor_graph_is_unicyclic(g, &mut uni), SomborStatus::Ok);
        assert_eq!((n, m, d, uni), (6, 6, 4, true));

        let mut so = 0.0;
        assert_eq!(
            sombor_index_value(g, SOMBOR_INDEX_SO, &mut so),
            SomborStatus::Ok
        );
        let exact = 2.0 * 10f64.sqrt() + 4.0 * 13f64.sqrt();
        assert!((so - exact).abs() < 1e-12);
        let mut closed = 0.0;
        assert_eq!(
            sombor_closed_form(6, 4, SOMBOR_INDEX_SO, &mut closed),
            SomborStatus::Ok
        );
        assert!((closed - exact).abs() < 1e-12);

        let mut built = ptr::null_mut();
        assert_eq!(sombor_build_u_n_d(6, 4, &mut built), SomborStatus::Ok);
        let a = take_string(|b, c, l| sombor_graph_certificate_hex(g, b, c, l));
        let b = take_string(|b, c, l| sombor_graph_certificate_hex(built, b, c, l));
        assert_eq!(a, b);

        let text = take_string(|b, c, l| sombor_graph_to_text(g, b, c, l));
        let text = CString::new(text).unwrap();
        let mut parsed = ptr::null_mut();
        assert_eq!(
            sombor_graph_from_text(text.as_ptr(), &mut parsed),
            SomborStatus::Ok
        );
        let c = take_string(|b, c, l| sombor_graph_certificate_hex(parsed, b, c, l));
        assert_eq!(a, c);

        sombor_graph_free(parsed);
        sombor_graph_free(built);
        sombor_graph_free(g);
        sombor_graph_free(ptr::null_mut());
    }
}

#[test]
fn errors_map_to_status_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        let loop_edge = [2usize, 2];
        assert_eq!(
            sombor_graph_from_edges(3, loop_edge.as_ptr(), 1, &mut g),
            SomborStatus::Input
        );
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        let mut d = 0;
        assert_eq!(
            sombor_graph_diameter(ptr::null(), &mut d),
            SomborStatus::NullPointer
        );
        assert!(last_error().contains("null"));

        let two_edges = [0usize, 1, 2, 3];
        assert_eq!(
            sombor_graph_from_edges(4, two_edges.as_ptr(), 2, &mut g),
            SomborStatus::Ok
        );
        assert_eq!(sombor_graph_diameter(g, &mut d), SomborStatus::Structure);
        let mut v = 0.0;
        assert_eq!(sombor_index_value(g, 7, &mut v), SomborStatus::Input);
        sombor_graph_free(g);

        let mut e = ptr::null_mut();
        assert_eq!(
            sombor_extremal(13, 4, SOMBOR_INDEX_SO, SOMBOR_DIRECTION_MAX, 0.0, &mut e),
            SomborStatus::Capability
        );
        assert_eq!(
            sombor_extremal(6, 5, SOMBOR_INDEX_SO, SOMBOR_DIRECTION_MAX, 0.0, &mut e),
            SomborStatus::Domain
        );
        assert_eq!(
            sombor_closed_form(6, 5, SOMBOR_INDEX_SO, &mut v),
            SomborStatus::Input
        );
    }
}

#[test]
fn extremal_handle() {
    let mut e = ptr::null_mut();
    unsafe {
        assert_eq!(
            sombor_extremal(
                7,
                SOMBOR_ANY_DIAMETER,
                SOMBOR_INDEX_SO,
                SOMBOR_DIRECTION_MIN,
                0.0,
                &mut e
            ),
            SomborStatus::Ok
        );
        let (mut value, mut count, mut searched) = (0.0, 0, 0);
        assert_eq!(sombor_extremal_value(e, &mut value), SomborStatus::Ok);
        assert_eq!(
            sombor_extremal_optimum_count(e, &mut count),
            SomborStatus::Ok
        );
        assert_eq!(
            sombor_extremal_count_searched(e, &mut searched),
            SomborStatus::Ok
        );
        assert!((value - 14.0 * 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(count, 1);
        assert!(searched > 1);

        let mut cycle = ptr::null_mut();
        assert_eq!(sombor_build_cycle(7, &mut cycle), SomborStatus::Ok);
        let want = take_string(|b, c, l| sombor_graph_certificate_hex(cycle, b, c, l));
        let got = take_string(|b, c, l| sombor_extremal_optimum_hex(e, 0, b, c, l));
        assert_eq!(want, got);
        let mut len = 0;
        assert_eq!(
            sombor_extremal_optimum_hex(e, 1, ptr::null_mut(), 0, &mut len),
            SomborStatus::Input
        );

        sombor_graph_free(cycle);
        sombor_extremal_free(e);
    }
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/sombor.h");
    for name in [
        "typedef struct SomborGraph SomborGraph;",
        "typedef struct SomborExtremal SomborExtremal;",
        "SOMBOR_STATUS_BUFFER_TOO_SMALL = 7",
        "sombor_graph_from_edges(",
        "sombor_graph_certificate_hex(",
        "sombor_extremal_optimum_hex(",
        "sombor_last_error(",
        "#define SOMBOR_INDEX_SO_RED 1",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_TARGET_TMPDIR");
    let src = std::path::Path::new(dir).join("sombor_header_check.c");
    std::fs::write(
        &src,
        "#include \"sombor.h\"\n\
         int main(void) {\n\
           SomborGraph *g = 0;\n\
           SomborStatus s = sombor_build_cycle(5, &g);\n\
           sombor_graph_free(g);\n\
           return s == SOMBOR_STATUS_OK ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let status = std::process::Command::new("cc")
        .args([
            "-std=c99",
            "-Wall",
            "-Werror",
            "-fsyntax-only",
            "-I",
            include,
        ])
        .arg(&src)
        .status()
        .expect("a C compiler is on PATH");
    assert!(status.success());
}
