//! Extract the degree-4 character table and print it as CSV, then query one
//! entry and the degree column.
//!
//! Run with: cargo run --release --example character_table

use qduality::characters::bprime_char_table;
use qduality::combinatorics::{BiPartition, Partition};

fn main() {
    let table = bprime_char_table(4).unwrap();
    println!("{}", table.to_csv());

    let row = BiPartition::new(Partition::new(vec![3, 1]).unwrap(), Partition::empty());
    let col = BiPartition::new(
        Partition::new(vec![1, 1, 1, 1]).unwrap(),
        Partition::empty(),
    );
    println!(
        "value at module {} / class {} = {}",
        row.label(),
        col.label(),
        table.value(&row, &col).unwrap()
    );

    println!("\ndegree column (identity class):");
    for (pair, value) in table.rows.iter().zip(table.degree_column()) {
        println!("  {:8} {}", pair.label(), value);
    }
}
