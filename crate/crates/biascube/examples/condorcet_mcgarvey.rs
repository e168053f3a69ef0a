//! Social choice on top of monotone odd rules: the Condorcet cycle from
//! three transitive voters, and the McGarvey construction that realizes any
//! target tournament under simple majority with two voters per edge.

use biascube::social::{
    majority_tournament, mcgarvey_construct, mcgarvey_exhaustive, verify_majority_realization,
    PreferenceProfile, Tournament,
};

fn main() {
    // Three transitive rankings, cyclic collective preference.
    let profile =
        PreferenceProfile::new(3, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
    let t = majority_tournament(&profile).unwrap();
    println!("Condorcet paradox, 3 voters with transitive rankings:");
    println!("  pairwise outcomes: {:?}", t.edge_lines());
    println!("  has cycle: {}", t.has_cycle());
    println!("  Condorcet winner: {:?}", t.condorcet_winner());

    // Pick an arbitrary 4-candidate tournament and realize it.
    let target = Tournament::new(4, vec![true, false, true, true, false, true]).unwrap();
    let profile = mcgarvey_construct(&target).unwrap();
    println!(
        "\ntarget tournament on 4 candidates: {:?}",
        target.edge_lines()
    );
    println!("  realized by {} voters (2 per edge):", profile.voters());
    for (v, ranking) in profile.rankings().iter().enumerate() {
        println!("  voter {:>2}: {ranking:?}", v + 1);
    }
    println!(
        "  verified: {}",
        verify_majority_realization(&profile, &target).unwrap()
    );

    // Every tournament is reachable; margins are exactly +-2 per edge.
    for m in [3usize, 4] {
        let total = 1usize << (m * (m - 1) / 2);
        let realized = mcgarvey_exhaustive(m).unwrap();
        println!("\nm = {m}: {realized}/{total} tournaments realized");
    }
}
