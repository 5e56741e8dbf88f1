use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inversion::InversionTable;
use crate::matching::Matching;
use crate::matrix::TriangularMatrix;
use crate::permutation::Permutation;
use crate::poset::{FactorialPoset, Poset};
use crate::statistics::{self, count_pattern_p, Stat};

use super::generators::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectClass {
    Matchings,
    InversionTables,
    Permutations,
    FactorialPosets,
    NaturalPosets,
    Matrices,
    AscentSequences,
}

impl ObjectClass {
    pub const ALL: [ObjectClass; 7] = [
        ObjectClass::Matchings,
        ObjectClass::InversionTables,
        ObjectClass::Permutations,
        ObjectClass::FactorialPosets,
        ObjectClass::NaturalPosets,
        ObjectClass::Matrices,
        ObjectClass::AscentSequences,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectClass::Matchings => "matchings",
            ObjectClass::InversionTables => "inversion_tables",
            ObjectClass::Permutations => "permutations",
            ObjectClass::FactorialPosets => "factorial_posets",
            ObjectClass::NaturalPosets => "natural_posets",
            ObjectClass::Matrices => "matrices",
            ObjectClass::AscentSequences => "ascent_sequences",
        }
    }

    pub fn generate(self, n: usize) -> Box<dyn Iterator<Item = Object> + Send> {
        match self {
            ObjectClass::Matchings => Box::new(gen_matchings(n).map(Object::Matching)),
            ObjectClass::InversionTables => Box::new(gen_inversion_tables(n).map(Object::InversionTable)),
            ObjectClass::Permutations => Box::new(gen_permutations(n).map(Object::Permutation)),
            ObjectClass::FactorialPosets => Box::new(gen_factorial_posets(n).map(Object::FactorialPoset)),
            ObjectClass::NaturalPosets => Box::new(gen_natural_posets(n).map(Object::Poset)),
            ObjectClass::Matrices => Box::new(gen_matrices(n).map(Object::Matrix)),
            ObjectClass::AscentSequences => Box::new(gen_ascent_sequences(n).map(Object::AscentSequence)),
        }
    }
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectClass {
    type Err = Error;

    /// Accepts the plural class name or its singular.
    fn from_str(s: &str) -> Result<Self> {
        ObjectClass::ALL
            .into_iter()
            .find(|c| {
                let name = c.name();
                s == name || Some(s) == name.strip_suffix('s') || (s == "matrix" && *c == ObjectClass::Matrices)
            })
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// One generated object. Serializes to the plain JSON form of its type.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Object {
    Matching(Matching),
    InversionTable(InversionTable),
    Permutation(Permutation),
    FactorialPoset(FactorialPoset),
    Poset(Poset),
    Matrix(TriangularMatrix),
    AscentSequence(Vec<u32>),
}

impl Object {
    pub fn class(&self) -> ObjectClass {
        match self {
            Object::Matching(_) => ObjectClass::Matchings,
            Object::InversionTable(_) => ObjectClass::InversionTables,
            Object::Permutation(_) => ObjectClass::Permutations,
            Object::FactorialPoset(_) => ObjectClass::FactorialPosets,
            Object::Poset(_) => ObjectClass::NaturalPosets,
            Object::Matrix(_) => ObjectClass::Matrices,
            Object::AscentSequence(_) => ObjectClass::AscentSequences,
        }
    }

    fn as_poset(&self) -> Option<&Poset> {
        match self {
            Object::FactorialPoset(p) => Some(p.poset()),
            Object::Poset(p) => Some(p),
            _ => None,
        }
    }

    pub fn stat(&self, stat: Stat) -> Result<u64> {
        let value = match self {
            Object::Matching(m) => statistics::matching_stat(m, stat),
            Object::Permutation(pi) => statistics::perm_stat(pi, stat),
            Object::FactorialPoset(p) => statistics::poset_stat(p, stat),
            Object::InversionTable(w) if stat == Stat::Dent => Some(w.distinct_entries() as u64),
            _ => None,
        };
        value.ok_or_else(|| Error::StatisticNotApplicable {
            stat: stat.to_string(),
            class: self.class().to_string(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    NoLeftNesting,
    NoLeftCrossing,
    NoNeighborNesting,
    NoNeighborCrossing,
    NoNesting,
    NoCrossing,
    No2LeftNesting,
    Lne0AndRcr0,
    Natural,
    Factorial,
    DuallyFactorial,
    TwoPlusTwoFree,
    ThreePlusOneFree,
    ConditionOne,
    ConditionOneVar,
    DescentCorrecting,
    AscentCorrecting,
    ZeroOne,
    NonnestingImage,
    NoncrossingImage,
    AvoidsP,
}

impl Predicate {
    pub const ALL: [Predicate; 21] = [
        Predicate::NoLeftNesting,
        Predicate::NoLeftCrossing,
        Predicate::NoNeighborNesting,
        Predicate::NoNeighborCrossing,
        Predicate::NoNesting,
        Predicate::NoCrossing,
        Predicate::No2LeftNesting,
        Predicate::Lne0AndRcr0,
        Predicate::Natural,
        Predicate::Factorial,
        Predicate::DuallyFactorial,
        Predicate::TwoPlusTwoFree,
        Predicate::ThreePlusOneFree,
        Predicate::ConditionOne,
        Predicate::ConditionOneVar,
        Predicate::DescentCorrecting,
        Predicate::AscentCorrecting,
        Predicate::ZeroOne,
        Predicate::NonnestingImage,
        Predicate::NoncrossingImage,
        Predicate::AvoidsP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::NoLeftNesting => "no_left_nesting",
            Predicate::NoLeftCrossing => "no_left_crossing",
            Predicate::NoNeighborNesting => "no_neighbor_nesting",
            Predicate::NoNeighborCrossing => "no_neighbor_crossing",
            Predicate::NoNesting => "no_nesting",
            Predicate::NoCrossing => "no_crossing",
            Predicate::No2LeftNesting => "no_2_left_nesting",
            Predicate::Lne0AndRcr0 => "lne0_and_rcr0",
            Predicate::Natural => "natural",
            Predicate::Factorial => "factorial",
            Predicate::DuallyFactorial => "dually_factorial",
            Predicate::TwoPlusTwoFree => "two_plus_two_free",
            Predicate::ThreePlusOneFree => "three_plus_one_free",
            Predicate::ConditionOne => "condition_one",
            Predicate::ConditionOneVar => "condition_one_var",
            Predicate::DescentCorrecting => "descent_correcting",
            Predicate::AscentCorrecting => "ascent_correcting",
            Predicate::ZeroOne => "zero_one",
            Predicate::NonnestingImage => "nonnesting_image",
            Predicate::NoncrossingImage => "noncrossing_image",
            Predicate::AvoidsP => "avoids_p",
        }
    }

    pub fn applies_to(self, class: ObjectClass) -> bool {
        use Predicate::*;
        match self {
            NoLeftNesting | NoLeftCrossing | NoNeighborNesting | NoNeighborCrossing | NoNesting | NoCrossing
            | No2LeftNesting | Lne0AndRcr0 => class == ObjectClass::Matchings,
            Natural | Factorial | DuallyFactorial | TwoPlusTwoFree | ThreePlusOneFree | ConditionOne
            | ConditionOneVar => matches!(class, ObjectClass::FactorialPosets | ObjectClass::NaturalPosets),
            DescentCorrecting | AscentCorrecting => class == ObjectClass::InversionTables,
            ZeroOne | NonnestingImage | NoncrossingImage => class == ObjectClass::Matrices,
            AvoidsP => class == ObjectClass::Permutations,
        }
    }

    pub fn holds(self, object: &Object) -> Result<bool> {
        use Predicate::*;
        if !self.applies_to(object.class()) {
            return Err(Error::PredicateNotApplicable {
                predicate: self.name().to_string(),
                class: object.class().to_string(),
            });
        }
        Ok(match object {
            Object::Matching(m) => {
                if self == No2LeftNesting {
                    return Ok(m.count_m_left_nestings(2) == 0);
                }
                let r = m.arc_statistics();
                match self {
                    NoLeftNesting => r.lne == 0,
                    NoLeftCrossing => r.lcr == 0,
                    NoNeighborNesting => r.lne == 0 && r.rne == 0,
                    NoNeighborCrossing => r.lcr == 0 && r.rcr == 0,
                    NoNesting => r.ne == 0,
                    NoCrossing => r.cr == 0,
                    _ => r.lne == 0 && r.rcr == 0,
                }
            }
            Object::InversionTable(w) => match self {
                DescentCorrecting => w.is_descent_correcting(),
                _ => w.is_ascent_correcting(),
            },
            Object::Matrix(t) => match self {
                ZeroOne => t.is_zero_one(),
                NonnestingImage => t.is_nonnesting_image(),
                _ => t.is_noncrossing_image(),
            },
            Object::Permutation(pi) => count_pattern_p(pi) == 0,
            _ => {
                let p = object.as_poset().expect("poset class");
                match self {
                    Natural => p.is_naturally_labeled(),
                    Factorial => p.is_factorial(),
                    DuallyFactorial => p.is_dually_factorial(),
                    TwoPlusTwoFree => p.is_two_plus_two_free(),
                    ThreePlusOneFree => p.is_three_plus_one_free(),
                    ConditionOne => p.satisfies_condition_one(),
                    _ => p.satisfies_condition_one_var(),
                }
            }
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// The objects of `class` on `[n]` satisfying every predicate, in
/// generation order.
pub fn filter_class(
    class: ObjectClass,
    n: usize,
    predicates: &[Predicate],
) -> Result<impl Iterator<Item = Object> + Send> {
    if let Some(p) = predicates.iter().find(|p| !p.applies_to(class)) {
        return Err(Error::PredicateNotApplicable { predicate: p.name().to_string(), class: class.to_string() });
    }
    let predicates = predicates.to_vec();
    Ok(class
        .generate(n)
        .filter(move |o| predicates.iter().all(|p| p.holds(o).expect("checked above"))))
}

/// Size of a filtered class.
pub fn count_class(class: ObjectClass, n: usize, predicates: &[Predicate]) -> Result<u64> {
    Ok(filter_class(class, n, predicates)?.count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in ObjectClass::ALL {
            assert_eq!(c.name().parse::<ObjectClass>().unwrap(), c);
        }
        assert_eq!("matching".parse::<ObjectClass>().unwrap(), ObjectClass::Matchings);
        assert_eq!("matrix".parse::<ObjectClass>().unwrap(), ObjectClass::Matrices);
        for p in Predicate::ALL {
            assert_eq!(p.name().parse::<Predicate>().unwrap(), p);
        }
        assert!(matches!("bogus".parse::<Predicate>(), Err(Error::UnknownPredicate(_))));
    }

    #[test]
    fn filters() {
        let n3: Vec<String> = filter_class(ObjectClass::Matchings, 3, &[Predicate::NoLeftNesting])
            .unwrap()
            .map(|o| match o {
                Object::Matching(m) => m.to_string(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(n3.len(), 6);
        assert!(n3.contains(&"{(1,2),(3,5),(4,6)}".to_string()));
        assert_eq!(count_class(ObjectClass::Matchings, 3, &[Predicate::NoNesting]).unwrap(), 5);
        assert_eq!(count_class(ObjectClass::FactorialPosets, 3, &[Predicate::DuallyFactorial]).unwrap(), 5);
        assert!(matches!(
            count_class(ObjectClass::Permutations, 3, &[Predicate::NoNesting]),
            Err(Error::PredicateNotApplicable { .. })
        ));
    }

    #[test]
    fn inapplicable_statistic() {
        let o = Object::Matrix(TriangularMatrix::identity(1));
        assert!(matches!(o.stat(Stat::Inv), Err(Error::StatisticNotApplicable { .. })));
    }
}
