//! Small combinatorial helpers and the parallel/sequential switch.

/// All `k`-tuples over `items`, in lexicographic index order.
pub fn tuples<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(k)];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * items.len());
        for prefix in &out {
            for x in items {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// All multisets of size `k` drawn from `0..n`, as sorted index vectors.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// How a batch of independent cases is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    /// Order-preserving map. Falls back to sequential when the `parallel`
    /// feature is off.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }
}

/// Runs `f` with at most `jobs` worker threads. `jobs = 0` keeps the
/// global pool; without the `parallel` feature `f` simply runs.
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if jobs > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}
