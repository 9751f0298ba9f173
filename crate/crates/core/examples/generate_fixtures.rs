//! Regenerate the shipped split fixtures from the builders:
//! `cargo run --example generate_fixtures`.

use strongcurv::io::{split_to_json, write_json};
use strongcurv::liealg::{build_split, Space};

fn main() -> strongcurv::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir)?;
    let spaces: &[(&str, Space)] = &[
        ("w6", Space::W6),
        ("w12", Space::W12),
        ("w7_1_1", Space::W7 { k: 1, l: 1 }),
        ("b7", Space::B7),
        ("b13", Space::B13),
        ("berger7", Space::BergerSphere(1)),
        ("sphere5", Space::Sphere(5)),
        ("cpn2", Space::Cpn(2)),
        ("hpn2", Space::Hpn(2)),
    ];
    for (name, space) in spaces {
        let split = build_split(*space)?;
        let path = dir.join(format!("{name}.json"));
        write_json(&split_to_json(&split), &path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
