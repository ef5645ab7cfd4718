use quotchi::identities::{default_grid, FAMILIES};

#[test]
fn default_grids_pass() {
    let mut total = 0;
    for family in FAMILIES {
        let reports = default_grid(family).unwrap();
        total += reports.len();
        for r in &reports {
            assert!(r.pass, "{r}");
        }
    }
    assert!(total >= 200, "only {total} grid points");
}
