// The identity suite, plus one negative control.

use degenfact::verify::{
    default_lambda_modes, run_all, run_check, CheckId, IdentityCheck, Mutation,
};

pub fn run() {
    let report = run_all(8, 8, &default_lambda_modes());
    print!("{}", report.to_text(false));
    assert!(report.all_passed());

    // scaling the k/2 coefficient in the recursion must be caught
    let mutated = IdentityCheck::new(CheckId::Thm4, 8, 8).with_mutation(Mutation::seeded(7));
    let mutated = run_check(mutated).unwrap();
    println!("mutated THM4: {}", mutated.counterexample().unwrap());
}

#[allow(dead_code)]
fn main() {
    run();
}
