//! Writes the built-in groups as JSON group files.
//!
//!     cargo run --example export_presets [DIR]
//!
//! DIR defaults to `groups/` at the workspace root. The files load back with
//! `load_group` or `bsl --group FILE`. Numbers are written with enough digits
//! for two precision doublings past the default working precision, which is
//! what the theorem checks may ask for.

use std::path::PathBuf;

use bowen_series::numeric::Precision;
use bowen_series::polygon::{load_group, preset_golden_octagon, preset_modular, GroupFile};

fn main() -> bowen_series::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../groups"));
    std::fs::create_dir_all(&dir)?;
    let dir = dir.canonicalize()?;
    let working = Precision::default();
    let digits = Precision::new(working.doubled().doubled().bits + 64);
    for (file, group) in [
        ("modular.json", preset_modular(digits)),
        ("golden_octagon.json", preset_golden_octagon(digits)),
    ] {
        let path = dir.join(file);
        let mut file = GroupFile::from_data(group.data());
        file.precision_bits = working.bits;
        std::fs::write(&path, file.to_json() + "\n")?;
        // reload to make sure the file stands on its own
        let back = load_group(&path, None)?;
        println!("{:<22} {} letters, {} cusps", path.display(), back.size(), back.cusps().len());
    }
    Ok(())
}
