use std::collections::HashMap;

use super::{RootError, RootSystem};

/// A point of a Weyl orbit together with the breadth-first distance from the
/// starting weight. For a regular starting weight the distance is the length
/// of the unique Weyl element reaching the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPoint {
    pub weight: Vec<i64>,
    pub length: u32,
}

fn pack(w: &[i64]) -> Option<u128> {
    let mut key = 0u128;
    for &x in w {
        let b = i8::try_from(x).ok()? as u8;
        key = (key << 8) | b as u128;
    }
    Some(key)
}

fn unpack(mut key: u128, rank: usize) -> Vec<i64> {
    let mut out = vec![0i64; rank];
    for slot in out.iter_mut().rev() {
        *slot = (key & 0xff) as u8 as i8 as i64;
        key >>= 8;
    }
    out
}

/// Orbit of `start` (fundamental-weight coordinates) under the simple
/// reflections, by breadth-first closure with a visited set.
///
/// Points are returned in discovery order. Coordinates are packed into 8-bit
/// lanes, so rank must not exceed 16 and every coordinate must fit in `i8`;
/// both hold for orbits of `ρ` in all the systems this crate handles.
pub fn weyl_orbit(
    rs: &RootSystem,
    start: &[i64],
    cap: usize,
) -> Result<Vec<OrbitPoint>, RootError> {
    let rank = rs.rank();
    if rank > 16 {
        return Err(RootError::OrbitUnsupported(format!("rank {rank}")));
    }
    let simple: Vec<Vec<i64>> = (0..rank).map(|i| rs.simple_root_as_weight(i)).collect();
    let unsupported = || RootError::OrbitUnsupported("coordinate outside i8".into());
    let first = pack(start).ok_or_else(unsupported)?;
    let mut seen: HashMap<u128, u32> = HashMap::new();
    seen.insert(first, 0);
    let mut order = vec![first];
    let mut head = 0;
    while head < order.len() {
        let key = order[head];
        head += 1;
        let len = seen[&key];
        let w = unpack(key, rank);
        for (i, alpha) in simple.iter().enumerate() {
            if w[i] == 0 {
                continue;
            }
            let image: Vec<i64> = w.iter().zip(alpha).map(|(x, a)| x - w[i] * a).collect();
            let k = pack(&image).ok_or_else(unsupported)?;
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(k) {
                if order.len() >= cap {
                    return Err(RootError::CapExceeded { cap });
                }
                e.insert(len + 1);
                order.push(k);
            }
        }
    }
    Ok(order
        .into_iter()
        .map(|k| OrbitPoint {
            length: seen[&k],
            weight: unpack(k, rank),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn pack_round_trip() {
        let w = vec![-3, 0, 127, -128, 5];
        assert_eq!(unpack(pack(&w).unwrap(), 5), w);
        assert!(pack(&[200]).is_none());
    }

    #[test]
    fn rho_orbit_of_a2() {
        let rs = build_root_system("A2".parse().unwrap()).unwrap();
        let orbit = weyl_orbit(&rs, &rs.rho, 100).unwrap();
        assert_eq!(orbit.len(), 6);
        let longest = orbit.iter().max_by_key(|p| p.length).unwrap();
        assert_eq!(longest.length, 3);
        assert_eq!(longest.weight, vec![-1, -1]);
    }

    #[test]
    fn cap_is_enforced() {
        let rs = build_root_system("B3".parse().unwrap()).unwrap();
        assert_eq!(
            weyl_orbit(&rs, &rs.rho, 10),
            Err(RootError::CapExceeded { cap: 10 })
        );
    }
}
