//! Rank over GF(2) by sparse column reduction.

/// Rank of a 0/1 matrix given as columns of sorted row indices.
///
/// Columns are reduced left to right. The pivot of a column is its
/// lowest-index nonzero row; a column whose pivot is already owned is
/// replaced by its sum with the owner until it empties or finds a new pivot.
pub fn rank_mod2(rows: usize, columns: Vec<Vec<u32>>) -> usize {
    let mut owner: Vec<Option<usize>> = vec![None; rows];
    let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(columns.len());
    let mut rank = 0;
    let mut scratch = Vec::new();
    for mut col in columns {
        while let Some(&pivot) = col.first() {
            match owner[pivot as usize] {
                Some(j) => {
                    symmetric_difference(&col, &reduced[j], &mut scratch);
                    std::mem::swap(&mut col, &mut scratch);
                }
                None => {
                    owner[pivot as usize] = Some(reduced.len());
                    rank += 1;
                    break;
                }
            }
        }
        reduced.push(col);
    }
    rank
}

fn symmetric_difference(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_mod2(0, vec![]), 0);
        assert_eq!(rank_mod2(3, vec![vec![], vec![]]), 0);
        // hollow triangle boundary: rank 2 over GF(2)
        assert_eq!(rank_mod2(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]), 2);
        assert_eq!(rank_mod2(2, vec![vec![0], vec![1], vec![0, 1]]), 2);
    }

    #[test]
    fn duplicate_columns_cancel() {
        assert_eq!(rank_mod2(4, vec![vec![1, 3], vec![1, 3], vec![0, 2], vec![0, 1, 2, 3]]), 2);
    }
}
