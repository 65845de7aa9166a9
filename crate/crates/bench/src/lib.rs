//! Fixed instances shared by the benchmarks.

use stringcone::{ArQuiver, DynkinDiagram, Quiver, StringCrystal, WiringDiagram};

/// The D4 quiver satisfying condition (L) used for the conjecture check.
pub fn d4() -> Quiver {
    Quiver::parse("4>3,3>1,3>2").expect("valid quiver")
}

/// The linearly oriented quiver `1 → 2 → .. → n`.
pub fn linear_a(n: usize) -> Quiver {
    let arrows: Vec<String> = (1..n).map(|i| format!("{i}>{}", i + 1)).collect();
    if arrows.is_empty() {
        return Quiver::parse("1").expect("valid quiver");
    }
    Quiver::parse(&arrows.join(",")).expect("valid quiver")
}

pub fn ar(q: &Quiver) -> ArQuiver {
    ArQuiver::from_quiver(q)
}

pub fn wiring(q: &Quiver) -> WiringDiagram {
    WiringDiagram::new(q.diagram(), &q.adapted_word()).expect("type A")
}

pub fn strings(q: &Quiver) -> StringCrystal {
    StringCrystal::new(q.diagram(), &q.adapted_word())
}

pub fn orientations_a(n: usize) -> Vec<Quiver> {
    Quiver::all_orientations(&DynkinDiagram::type_a(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(linear_a(5).rank(), 5);
        assert_eq!(ar(&d4()).len(), 12);
        assert_eq!(wiring(&linear_a(4)).len(), 10);
        assert_eq!(strings(&linear_a(1)).len(), 1);
        assert_eq!(orientations_a(3).len(), 4);
    }
}
