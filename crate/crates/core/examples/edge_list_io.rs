//! Build a graph, write it in the edge-list format, read it back.

use blockspec::families::FamilySpec;
use blockspec::graph::{parse_edge_list, to_edge_list};

fn main() -> blockspec::Result<()> {
    let g = "cliquepath:3,3".parse::<FamilySpec>()?.build()?;
    let text = to_edge_list(&g);
    print!("{text}");

    let back = parse_edge_list(&text)?;
    assert_eq!(back, g);

    // blank lines are tolerated, a wrong edge count is not
    assert!(parse_edge_list("3 2\n0 1\n\n1 2\n").is_ok());
    assert!(parse_edge_list("3 5\n0 1\n1 2\n").is_err());
    Ok(())
}
