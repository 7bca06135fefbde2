fn main() {
    let ld = svir::su2::build_level_data::<f64>(2);
    let doc = svir::json::level_to_json(&ld);
    let text = doc.to_string_pretty();
    let back = svir::json::level_from_json(&svir::json::JsonDocument::parse(&text).unwrap()).unwrap();
    println!("level eq: {}", ld.level == back.level);
    println!("s eq: {}", ld.s == back.s);
    println!("t eq: {}", ld.t == back.t);
    println!("w eq: {}", ld.weights == back.weights);
    println!("d eq: {}", ld.dims == back.dims);
    for (a, b) in ld.t.iter().zip(&back.t) {
        if a != b { println!("t diff: {a:?} vs {b:?}  bits {:x} {:x} / {:x} {:x}", a.re.to_bits(), a.im.to_bits(), b.re.to_bits(), b.im.to_bits()); }
    }
    for (r, (a, b)) in ld.weights.iter().zip(&back.weights).enumerate() {
        if a != b { println!("w{} diff: {a} vs {b}", r); }
    }
}
