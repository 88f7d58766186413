"""result cache and verification ledger

Revision ID: 3b1f0c2d9a41
Revises:
Create Date: 2026-10-18 10:02:11.418233

"""
from alembic import op
import sqlalchemy as sa


# revision identifiers, used by Alembic.
revision = '3b1f0c2d9a41'
down_revision = None
branch_labels = None
depends_on = None


def upgrade():
    op.create_table(
        'computation_record',
        sa.Column('id', sa.Integer(), nullable=False),
        sa.Column('kind', sa.String(length=20), nullable=False),
        sa.Column('graph_key', sa.Text(), nullable=False),
        sa.Column('prime', sa.Integer(), nullable=False),
        sa.Column('order', sa.String(length=20), nullable=False),
        sa.Column('params', sa.Text(), nullable=False),
        sa.Column('result', sa.Text(), nullable=False),
        sa.Column('elapsed', sa.Float(), nullable=True),
        sa.Column('created_at', sa.DateTime(), nullable=True),
        sa.PrimaryKeyConstraint('id'),
        sa.UniqueConstraint('kind', 'graph_key', 'prime', 'order', 'params', name='uq_computation_record_key'),
    )
    op.create_index(op.f('ix_computation_record_kind'), 'computation_record', ['kind'], unique=False)

    op.create_table(
        'verification_run',
        sa.Column('id', sa.Integer(), nullable=False),
        sa.Column('started_at', sa.DateTime(), nullable=True),
        sa.Column('finished_at', sa.DateTime(), nullable=True),
        sa.Column('prime', sa.Integer(), nullable=False),
        sa.Column('families', sa.String(length=120), nullable=False),
        sa.Column('n_range', sa.String(length=20), nullable=False),
        sa.Column('seed', sa.Integer(), nullable=False),
        sa.Column('status', sa.String(length=10), nullable=True),
        sa.PrimaryKeyConstraint('id'),
    )

    op.create_table(
        'verification_check',
        sa.Column('id', sa.Integer(), nullable=False),
        sa.Column('run_id', sa.Integer(), nullable=False),
        sa.Column('name', sa.String(length=120), nullable=False),
        sa.Column('status', sa.String(length=10), nullable=False),
        sa.Column('detail', sa.Text(), nullable=True),
        sa.Column('elapsed', sa.Float(), nullable=True),
        sa.ForeignKeyConstraint(['run_id'], ['verification_run.id']),
        sa.PrimaryKeyConstraint('id'),
    )
    op.create_index(op.f('ix_verification_check_run_id'), 'verification_check', ['run_id'], unique=False)


def downgrade():
    op.drop_index(op.f('ix_verification_check_run_id'), table_name='verification_check')
    op.drop_table('verification_check')
    op.drop_table('verification_run')
    op.drop_index(op.f('ix_computation_record_kind'), table_name='computation_record')
    op.drop_table('computation_record')
