fn main() {
    println!("polarfilm");
}
