use flatsim::*;
fn main() {
    let s = square_torus();
    let cyls = cylinders_up_to(&s, 2.5).unwrap();
    for c in &cyls {
        println!("torus hol=({:.4},{:.4}) waist={:.4} height={:.6} area/waist={:.6}",
            c.holonomy.x, c.holonomy.y, c.holonomy.norm(), c.height, 1.0/c.holonomy.norm());
    }
    let s = four_square_surface();
    let cyls = cylinders_up_to(&s, 1.5).unwrap();
    for c in &cyls {
        println!("4sq hol=({:.4},{:.4}) height={:.6}", c.holonomy.x, c.holonomy.y, c.height);
    }
}
