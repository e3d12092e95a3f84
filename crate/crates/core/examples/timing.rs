use std::time::Instant;

fn main() {
    let ops = entq::LadderOperatorSet::new(2, 30).unwrap();
    let map = entq::BogoliubovMap::two_mode_squeeze(1.0).unwrap();
    let t = Instant::now();
    let sol = entq::fock_oracle::numeric_vacuum(&ops, &map).unwrap();
    println!("numeric_vacuum cutoff 30: {:?}", t.elapsed());
    let s = entq::fock_oracle::bipartition_entropy(&sol.state, &[0]).unwrap();
    let occ = entq::fock_oracle::expectation(&sol.state, &ops.number_operator(0)).unwrap();
    println!("S = {s:.12}  occ = {:.12}  residual = {:.3e}", occ.re, sol.residual);
}
