//! Regenerate the t = 3 tables and compare them with the checked-in golden files.

use redei::construct::{cells_from_json, diff_tables, full_table};
use redei::{CellStatus, Family, FieldContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = FieldContext::new(3, None)?;
    let data = redei::cli::default_data_dir();
    for (family, file) in [(Family::M, "table1.json"), (Family::N, "table2.json")] {
        let cells = full_table(&ctx, family)?;
        println!("family {family}, t = 3:");
        let mut n = 0;
        for cell in &cells {
            if cell.params.n != n {
                n = cell.params.n;
                print!("\n  n = {n:>2}:");
            }
            match &cell.status {
                CellStatus::Permutes(p) => print!("  {p}"),
                CellStatus::Excluded(_) => print!("  -"),
            }
        }
        let golden = cells_from_json(&std::fs::read_to_string(data.join(file))?)?;
        let diffs = diff_tables(&golden, &cells);
        println!(
            "\n  {} cells, {} differences from {file}\n",
            cells.len(),
            diffs.len()
        );
        for d in diffs {
            println!("  {d}");
        }
    }
    Ok(())
}
