//! Execution strategy for the data-parallel loops.
//!
//! With the `parallel` feature (default) the batch loops run on rayon; without
//! it, or when [`Execution::Sequential`] is requested, they run on the calling
//! thread. Both paths produce identical, index-ordered results.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// The strategy that will actually run; `Parallel` degrades to
    /// `Sequential` when the crate is built without rayon.
    pub fn effective(self) -> Execution {
        if cfg!(feature = "parallel") {
            self
        } else {
            Execution::Sequential
        }
    }

    /// Strategy for `jobs` workers. One worker means sequential; more size
    /// the global thread pool on first use (later calls keep the first size).
    /// Zero leaves the pool at its default size.
    pub fn for_jobs(jobs: usize) -> Execution {
        if jobs == 1 {
            return Execution::Sequential;
        }
        #[cfg(feature = "parallel")]
        if jobs > 1 {
            if let Err(e) = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build_global()
            {
                log::debug!("thread pool already configured: {e}");
            }
        }
        Execution::default()
    }

    /// Maps `f` over `0..len`, preserving index order in the output.
    pub fn map_indexed<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self.effective() {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            _ => (0..len).map(f).collect(),
        }
    }

    /// Maps `f` over a slice, preserving order.
    pub fn map_slice<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        self.map_indexed(items.len(), |i| f(&items[i]))
    }

    /// First `Some` in index order over `0..len`.
    pub fn find_map_first<T, F>(self, len: usize, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self.effective() {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().find_map_first(f)
            }
            _ => (0..len).find_map(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_paths_agree() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(exec.map_indexed(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(
                exec.find_map_first(100, |i| (i % 7 == 3).then_some(i)),
                Some(3)
            );
            assert_eq!(exec.find_map_first(10, |_| None::<usize>), None);
        }
    }
}
