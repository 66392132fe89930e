// Number triangles as CSV and JSON.

use degenfact::degenerate::LambdaMode;
use degenfact::triangle::{Family, NumberTriangle};

pub fn run() {
    let tri = NumberTriangle::build(Family::T2Lambda, 4, 4, &LambdaMode::Symbolic, None);
    print!("{}", tri.to_csv());

    let fixed = NumberTriangle::build(Family::S2Lambda, 3, 3, &"1/2".parse().unwrap(), None);
    let json = fixed.to_json_string();
    print!("{json}");
    assert_eq!(NumberTriangle::from_json_str(&json).unwrap(), fixed);
    assert_eq!(
        NumberTriangle::entries_from_csv(fixed.to_csv().as_bytes()).unwrap(),
        fixed.entries
    );
}

#[allow(dead_code)]
fn main() {
    run();
}
