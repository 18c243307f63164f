# database/session.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides catalog specific methods on top of the sqlalchemy session.

"""
from typing import Optional
from sqlalchemy import select
from sqlalchemy.orm.session import Session
from lowrank_strang.models import Checkpoint


class CatalogSession(Session):
    """
    Custom methods for looking up and recording reference checkpoints.
    """

    def find(self, content_hash: str) -> Optional[Checkpoint]:
        """
        Returns the checkpoint with the given content hash, if any.

        Args:
            content_hash (str): The hash of the reference parameters.
        """
        return self.scalars(
            select(Checkpoint).where(Checkpoint.content_hash == content_hash)
        ).first()

    def record(self, **attributes) -> Checkpoint:
        """
        Inserts or replaces the checkpoint with attributes["content_hash"] and commits.

        Returns:
            Checkpoint: The stored record.
        """
        checkpoint = self.find(attributes["content_hash"])
        if checkpoint is None:
            checkpoint = Checkpoint(**attributes)
        else:
            for key, value in attributes.items():
                setattr(checkpoint, key, value)
        self.add(checkpoint)
        self.commit()
        return checkpoint


def get_session(engine) -> CatalogSession:
    """
    Construct the catalog session.

    Args:
        engine: The database engine to create a session for.

    Returns:
        CatalogSession.
    """
    return CatalogSession(bind=engine, expire_on_commit=False)
