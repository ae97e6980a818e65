//! The size cap is process-wide, so everything touching it lives in this one
//! test binary and runs in a single test.

mod common;

use std::process::Command;

use polyldc::cli::exit;
use polyldc::monoidal::substitute;
use polyldc::polycore::{enumerate_homs, set_size_cap, size_cap, DEFAULT_CAP};
use polyldc::{PolyError, Polynomial};

fn with_env(cap: &str, args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_polyldc"))
        .args(args)
        .env("POLY_LDC_CAP", cap)
        .output()
        .expect("the binary runs")
        .status
        .code()
        .expect("exited normally")
}

#[test]
fn cap_is_enforced_and_overridable() {
    assert_eq!(size_cap(), DEFAULT_CAP);
    let big = Polynomial::representable(10);
    let two = Polynomial::linear(2);
    assert_eq!(substitute(&big, &two).unwrap().num_positions(), 1024);

    set_size_cap(1000);
    match substitute(&big, &two) {
        Err(PolyError::SizeCap { cap, needed, .. }) => assert_eq!((cap, needed.as_str()), (1000, "1024")),
        other => panic!("expected a size cap error, got {other:?}"),
    }
    let p = Polynomial::new(vec![2, 2, 2]);
    let q = Polynomial::new(vec![3, 3, 3, 3]);
    assert!(matches!(enumerate_homs(&p, &q), Err(PolyError::SizeCap { .. })));

    set_size_cap(0);
    assert_eq!(size_cap(), DEFAULT_CAP);
    assert!(substitute(&big, &two).is_ok());

    let args = ["sub", "y^10", "2y"];
    assert_eq!(with_env("1000", &args), exit::SIZE_CAP);
    assert_eq!(with_env("20000", &args), exit::OK);
    assert_eq!(with_env("1000", &["--cap", "20000", "sub", "y^10", "2y"]), exit::OK);
    assert_eq!(with_env("not a number", &args), exit::OK);
    assert_eq!(
        common::polyldc(&["--cap", "1023", "sub", "y^10", "2y"]).code,
        exit::SIZE_CAP
    );
}
