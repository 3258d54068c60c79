fn main() { println!("cmtk"); }
