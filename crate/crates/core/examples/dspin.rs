use gminors::closed_forms::*;
use gminors::minors::*;
use gminors::root_data::*;

fn main() {
    let g = GroupType::new(Family::D, 4).unwrap();
    for which in [4usize, 3] {
        for m in 2..=3 {
            let req = demazure_scope_request(g, m, which).unwrap();
            let direct = delta_l(&req).unwrap();
            let cf = closed_d_spin(g, m, which).unwrap();
            println!("=== which={which} m={m} word={} k={}", req.word(), req.k());
            println!("direct  ({} terms): {}", direct.num_terms(), direct);
            println!("closed  ({} terms): {}", cf.poly.num_terms(), cf.poly);
            println!("equal: {}", direct == cf.poly);
        }
    }
}
