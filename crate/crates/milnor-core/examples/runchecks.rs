fn main() {
    let (reports, ok) = milnor_core::validate::run_checks(None);
    for r in &reports {
        println!("{r}");
    }
    std::process::exit(if ok { 0 } else { 1 });
}
