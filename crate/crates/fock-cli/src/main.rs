fn main() {
    println!("fock");
}
