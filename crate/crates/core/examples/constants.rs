//! The constants computed at first use, with the route used for each.

use kummer::Constants;

fn main() {
    for (name, value, route) in Constants::get().entries() {
        println!("{name:<18} {value:+.16e}  {route}");
    }
}
