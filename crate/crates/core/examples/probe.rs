use enriques_core::bipoly::{divisor_form, BiPoly, Var};
use enriques_core::enriques::*;
use enriques_core::groebner::Ideal;
use std::time::Instant;

fn main() {
    let w = WVector::parse_csv("b+c,b+c,x+z,a+c,z,y,1", (0, 0)).unwrap();
    let i0 = ideal_from_w(&w).unwrap();
    let isat = i0.sat_irrelevant();
    let f_ideal = Ideal::new(vec![divisor_form()]);

    let t = Instant::now();
    let a_s = isat.sum(&f_ideal).sat_irrelevant();
    println!("AS sat: {:?} ({} gb)", t.elapsed(), a_s.gb().len());

    let t = Instant::now();
    let d_l = a_s.degree_piece(enriques_core::BiDegree::new(3, 0)).pop().unwrap();
    println!("degree piece: {:?}", t.elapsed());

    let t = Instant::now();
    let dli = Ideal::new(vec![d_l]).sum(&isat).sat_irrelevant();
    println!("sat(D_L + I): {:?} ({} gb)", t.elapsed(), dli.gb().len());

    let t = Instant::now();
    let c_l = dli.colon(&a_s).unwrap();
    println!("colon by AS: {:?} ({} gb)", t.elapsed(), c_l.gb().len());
    let _ = Var::A;
    let _: Option<BiPoly> = None;
}
