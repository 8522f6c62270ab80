fn main() {
    let t = std::time::Instant::now();
    let count = twodist::canon::enumerate_nonisomorphic(9, |_| {}).unwrap();
    println!("n=9: {} classes in {:?}", count, t.elapsed());
}
