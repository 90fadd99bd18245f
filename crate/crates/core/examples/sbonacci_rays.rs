//! Diagonal sums give Fibonacci, Tribonacci and their higher relatives; other
//! rays give sequences with longer linear recurrences.

use quasi_pascal::rays::{
    ray_recurrence_mismatches, ray_recurrence_safe_threshold, ray_sequence, sbonacci, Direction,
};

fn show(label: &str, terms: &[impl ToString]) {
    let text: Vec<String> = terms.iter().map(ToString::to_string).collect();
    println!("{label:<24} {}", text.join(", "));
}

fn main() {
    for s in 1..=4 {
        show(&format!("s-bonacci, s = {s}"), &sbonacci(s, 14));
    }

    let d = Direction::new(2, 0, 1).unwrap();
    show("s = 2, (2, 0, 1)", &ray_sequence(2, d, 14).terms);

    // The recurrence can miss just above alpha*s + r when r < 0.
    let d = Direction::new(3, 2, -2).unwrap();
    let claimed = d.recurrence_threshold(2);
    for m in ray_recurrence_mismatches(2, d, claimed, claimed + 10) {
        println!("(3, 2, -2) at n = {}: {} vs {}", m.n, m.lhs, m.rhs);
    }
    let safe = ray_recurrence_safe_threshold(2, d);
    println!(
        "clean from n = {safe}: {}",
        ray_recurrence_mismatches(2, d, safe, safe + 30).is_empty()
    );
}
