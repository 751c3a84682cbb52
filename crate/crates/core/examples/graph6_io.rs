//! Reading and writing graph6 and edge lists.

use zq_forcing::{emit_graph, parse_graph, zq_number, Format, Q};

fn main() -> zq_forcing::Result<()> {
    let g = parse_graph(b"0 1\n1 2\n2 3\n3 0\n0 4\n", Format::EdgeList)?;
    let g6 = emit_graph(&g, Format::Graph6);
    println!("graph6: {g6}");
    let back = parse_graph(g6.as_bytes(), Format::Graph6)?;
    assert_eq!(back, g);
    print!("edge list:\n{}", emit_graph(&back, Format::EdgeList));
    println!("Z_1 = {}", zq_number(&back, Q::Finite(1))?);

    match parse_graph(b"0 1\n1 x\n", Format::EdgeList) {
        Err(e) => println!("bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
