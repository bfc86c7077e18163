//! Small internal helpers.

/// Iterate all index tuples of the given radices in lexicographic order.
/// `dims = [2, 3]` yields `[0,0], [0,1], [0,2], [1,0], ...`. An empty `dims`
/// yields the single empty tuple. Any zero radix yields nothing.
pub(crate) fn mixed_radix(dims: &[usize]) -> MixedRadix {
    MixedRadix {
        dims: dims.to_vec(),
        state: if dims.contains(&0) {
            None
        } else {
            Some(vec![0; dims.len()])
        },
    }
}

pub(crate) struct MixedRadix {
    dims: Vec<usize>,
    state: Option<Vec<usize>>,
}

impl Iterator for MixedRadix {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        let next = self.state.as_mut().expect("state present");
        let mut done = true;
        for i in (0..next.len()).rev() {
            next[i] += 1;
            if next[i] < self.dims[i] {
                done = false;
                break;
            }
            next[i] = 0;
        }
        if done {
            self.state = None;
        }
        Some(current)
    }
}

/// Least common multiple of two positive lengths.
pub(crate) fn lcm_usize(a: usize, b: usize) -> usize {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// The divisors of `n` in ascending order.
pub(crate) fn divisors_ascending(n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_covers_the_box() {
        let all: Vec<Vec<usize>> = mixed_radix(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(mixed_radix(&[]).count(), 1);
        assert_eq!(mixed_radix(&[3, 0]).count(), 0);
    }

    #[test]
    fn lcm_and_divisors() {
        assert_eq!(lcm_usize(4, 6), 12);
        assert_eq!(lcm_usize(3, 3), 3);
        assert_eq!(divisors_ascending(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors_ascending(1), vec![1]);
    }
}
